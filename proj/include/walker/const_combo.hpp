#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "walker/specfun.hpp"

namespace walker {

/// Named constant bases over which moment families are exact rational
/// linear combinations.
enum class ConstBasis {
    unit,      // {1}
    w3_odd,    // {A, 1/(pi^2 A)}
    w4_odd,    // {A4, B4}
    r5,        // {r50, 1/(pi^4 r50)}
    w3_deriv,  // {1, sqrt(3)/pi, Cl(pi/3)/pi}
};

inline std::vector<std::string> basis_names(ConstBasis b) {
    switch (b) {
        case ConstBasis::unit: return {"1"};
        case ConstBasis::w3_odd: return {"A", "1/(pi^2 A)"};
        case ConstBasis::w4_odd: return {"A4", "B4"};
        case ConstBasis::r5: return {"r50", "1/(pi^4 r50)"};
        case ConstBasis::w3_deriv: return {"1", "sqrt(3)/pi", "Cl(pi/3)/pi"};
    }
    throw domain_error("basis_names: bad basis");
}

inline std::vector<Real> basis_values(ConstBasis b) {
    const Real pi = real_pi();
    switch (b) {
        case ConstBasis::unit: return {Real(1)};
        case ConstBasis::w3_odd: {
            const Real& A = constant("A");
            return {A, 1 / (pi * pi * A)};
        }
        case ConstBasis::w4_odd: return {constant("A4"), constant("B4")};
        case ConstBasis::r5: {
            const Real& r = constant("r50");
            return {r, 1 / (pow(pi, 4) * r)};
        }
        case ConstBasis::w3_deriv:
            return {Real(1), constant("sqrt3") / pi, constant("Cl_pi_3") / pi};
    }
    throw domain_error("basis_values: bad basis");
}

/// Exact rational linear combination over a constant basis.
struct ConstCombo {
    ConstBasis basis = ConstBasis::unit;
    std::vector<BigRat> coeffs;

    ConstCombo() = default;
    ConstCombo(ConstBasis b, std::vector<BigRat> c) : basis(b), coeffs(std::move(c)) {
        if (coeffs.size() != basis_names(b).size())
            throw domain_error("ConstCombo: coefficient count must match basis arity");
    }

    Real value() const {
        auto vals = basis_values(basis);
        Real s = 0;
        for (size_t i = 0; i < coeffs.size(); ++i) s += to_real(coeffs[i]) * vals[i];
        return s;
    }

    ConstCombo& operator+=(const ConstCombo& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    ConstCombo& operator-=(const ConstCombo& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    ConstCombo& operator*=(const BigRat& q) {
        for (auto& c : coeffs) c *= q;
        return *this;
    }
    friend ConstCombo operator+(ConstCombo a, const ConstCombo& b) { return a += b; }
    friend ConstCombo operator-(ConstCombo a, const ConstCombo& b) { return a -= b; }
    friend ConstCombo operator*(ConstCombo a, const BigRat& q) { return a *= q; }
    friend ConstCombo operator*(const BigRat& q, ConstCombo a) { return a *= q; }
    friend bool operator==(const ConstCombo& a, const ConstCombo& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }

    std::string str() const {
        auto names = basis_names(basis);
        std::string s;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + rat_str(coeffs[i]) + ")*" + names[i];
        }
        return s.empty() ? "0" : s;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        auto names = basis_names(basis);
        for (size_t i = 0; i < coeffs.size(); ++i) j["coeffs"][names[i]] = rat_str(coeffs[i]);
        j["value"] = value().convert_to<std::string>();
        return j;
    }

  private:
    void check_same(const ConstCombo& o) const {
        if (basis != o.basis) throw domain_error("ConstCombo: basis mismatch");
        if (coeffs.size() != o.coeffs.size()) throw domain_error("ConstCombo: arity mismatch");
    }
};

}  // namespace walker

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "walker/rational.hpp"

namespace walker {

/// Laurent polynomial in x over BigRat: a finite map exponent -> coefficient.
/// Zero coefficients are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigRat& c) {
        if (c != 0) terms_[0] = c;
    }

    static LaurentPoly monomial(const BigRat& c, int e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const std::map<int, BigRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    BigRat coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRat(0) : it->second;
    }

    void add_term(int e, const BigRat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const BigRat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const BigRat& c) { return a *= c; }
    friend LaurentPoly operator*(const BigRat& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (e != 0) r.add_term(e - 1, c * e);
        return r;
    }

    /// Antiderivative; a 1/x term has no Laurent antiderivative.
    LaurentPoly antiderivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e == -1) throw domain_error("LaurentPoly: antiderivative of x^-1");
            r.add_term(e + 1, c / (e + 1));
        }
        return r;
    }

    LaurentPoly shift_exponents(int d) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
        return r;
    }

    /// Substitute x -> -x.
    LaurentPoly reflect() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 == 0) ? c : -c;
        return r;
    }

    BigRat eval_rat(const BigRat& x) const {
        BigRat r = 0;
        for (const auto& [e, c] : terms_) r += c * rat_pow(x, e);
        return r;
    }

    Real eval(const Real& x) const {
        Real r = 0;
        for (const auto& [e, c] : terms_) r += to_real(c) * pow(x, e);
        return r;
    }

  private:
    std::map<int, BigRat> terms_;
};

}  // namespace walker

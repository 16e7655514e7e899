#pragma once

#include <sstream>
#include <vector>

#include "json.hpp"
#include "walker/halfint.hpp"
#include "walker/laurent.hpp"

namespace walker {

/// Narayana-type coefficient binom(k,j) (k+nu)! nu! / ((k-j+nu)! (j+nu)!),
/// written as a finite product so it stays exact for half-integer nu.
inline BigRat walk_conv_coeff(int k, int j, const HalfInt& nu) {
    BigRat r(binomial_int(k, j));
    r *= rising(nu.rat() + (j + 1), k - j);
    r /= rising(nu.rat() + 1, k - j);
    return r;
}

/// W_n(nu; 2k) by the multinomial double sum. Integer nu only: the
/// factorials turn into Gamma values for half-odd nu (use even_moment_conv).
inline BigRat even_moment_multinomial(int n, const HalfInt& nu, int k) {
    if (n < 1 || k < 0) throw domain_error("even_moment_multinomial: need n >= 1, k >= 0");
    if (!nu.is_integer())
        throw unsupported_error(
            "even_moment_multinomial: half-odd nu is not a factorial path; use "
            "even_moment_conv");
    int v = nu.int_value();
    BigInt sum = 0;
    std::vector<int> parts(n, 0);
    BigInt kfac = factorial_int(k);
    BigInt knv = factorial_int(k + n * v);
    // iterate compositions k_1 + ... + k_n = k
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            parts[pos] = rem;
            BigInt m1 = kfac, m2 = knv;
            for (int i = 0; i < n; ++i) {
                m1 /= factorial_int(parts[i]);
                m2 /= factorial_int(parts[i] + v);
            }
            sum += m1 * m2;
            return;
        }
        for (int i = 0; i <= rem; ++i) {
            parts[pos] = i;
            self(self, pos + 1, rem - i);
        }
    };
    rec(rec, 0, k);
    BigRat w(factorial_int(k + v) * pow(BigInt(factorial_int(v)), n - 1) * sum, knv);
    return w;
}

/// Table of even moments W_n(nu; 2k), k = 0..kmax.
struct MomentTable {
    int n_steps;
    HalfInt nu;
    std::vector<BigRat> values;

    static MomentTable build(int n, const HalfInt& nu, int kmax) {
        if (n < 1 || kmax < 0) throw domain_error("MomentTable: need n >= 1, kmax >= 0");
        std::vector<BigRat> w(kmax + 1, BigRat(1));  // W_1(nu; 2k) = 1
        for (int steps = 2; steps <= n; ++steps) {
            std::vector<BigRat> next(kmax + 1);
            for (int k = 0; k <= kmax; ++k) {
                BigRat s = 0;
                for (int j = 0; j <= k; ++j) s += walk_conv_coeff(k, j, nu) * w[j];
                next[k] = s;
            }
            w = std::move(next);
        }
        return {n, nu, std::move(w)};
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "k,value\n";
        for (size_t k = 0; k < values.size(); ++k) os << k << "," << rat_str(values[k]) << "\n";
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n_steps"] = n_steps;
        j["dimension"] = nu.dimension();
        j["values"] = nlohmann::json::array();
        for (const auto& v : values) j["values"].push_back(rat_str(v));
        return j;
    }
};

/// W_n(nu; 2k) by the convolution recursion; exact for every half-integer nu.
inline BigRat even_moment_conv(int n, const HalfInt& nu, int k) {
    return MomentTable::build(n, nu, k).values[k];
}

/// Lower triangular matrix A(nu) whose n-th power's row sums are the moments
/// W_{n+1}(nu; 2k). For nu = 1 the entries are the Narayana numbers.
class NarayanaMatrix {
  public:
    NarayanaMatrix(const HalfInt& nu, int size) : nu_(nu), size_(size) {
        if (size < 1) throw domain_error("NarayanaMatrix: size >= 1");
        a_.assign(size, std::vector<BigRat>(size, BigRat(0)));
        for (int k = 0; k < size; ++k)
            for (int j = 0; j <= k; ++j) a_[k][j] = walk_conv_coeff(k, j, nu);
    }

    const HalfInt& nu() const { return nu_; }
    int size() const { return size_; }
    const BigRat& at(int k, int j) const { return a_[k][j]; }

    NarayanaMatrix power(int n) const {
        if (n < 1) throw domain_error("NarayanaMatrix::power: n >= 1");
        NarayanaMatrix r = *this;
        for (int i = 1; i < n; ++i) r = r.times(*this);
        return r;
    }

    std::vector<BigRat> row_sums() const {
        std::vector<BigRat> s(size_);
        for (int k = 0; k < size_; ++k) {
            BigRat acc = 0;
            for (int j = 0; j <= k; ++j) acc += a_[k][j];
            s[k] = acc;
        }
        return s;
    }

  private:
    NarayanaMatrix times(const NarayanaMatrix& o) const {
        NarayanaMatrix r(nu_, size_);
        for (auto& row : r.a_) row.assign(size_, BigRat(0));
        for (int i = 0; i < size_; ++i)
            for (int k = 0; k <= i; ++k) {
                if (a_[i][k] == 0) continue;
                for (int j = 0; j <= k; ++j) r.a_[i][j] += a_[i][k] * o.a_[k][j];
            }
        return r;
    }

    HalfInt nu_;
    int size_;
    std::vector<std::vector<BigRat>> a_;
};

inline std::vector<BigRat> narayana_power_rowsums(const HalfInt& nu, int n, int size) {
    return NarayanaMatrix(nu, size).power(n).row_sums();
}

// ---- holonomic recursion validators ------------------------------------

/// (k+2nu+1)(k+3nu+1) W(2k+2) = 1/2 (20(k+1/2)^2 + 60(k+1/2)nu + 36nu^2 + 1) W(2k)
///                               - 9 k (k+nu) W(2k-2)
inline bool validate_recursion_w3_values(const std::vector<BigRat>& w, const HalfInt& nu,
                                         int kmax) {
    BigRat v = nu.rat();
    for (int k = 1; k <= kmax && k + 1 < (int)w.size(); ++k) {
        BigRat h = BigRat(2 * k + 1, 2);  // k + 1/2
        BigRat lhs = (k + 2 * v + 1) * (k + 3 * v + 1) * w[k + 1];
        BigRat rhs = (20 * h * h + 60 * h * v + 36 * v * v + 1) / 2 * w[k] -
                     9 * k * (k + v) * w[k - 1];
        if (lhs != rhs) return false;
    }
    return true;
}

/// (k+2nu+1)(k+3nu+1)(k+4nu+1) W(2k+2) =
///   ((k+1/2) + 2nu)(20(k+1/2)^2 + 80(k+1/2)nu + 48nu^2 + 3) W(2k)
///   - 64 k (k+nu)(k+2nu) W(2k-2)
inline bool validate_recursion_w4_values(const std::vector<BigRat>& w, const HalfInt& nu,
                                         int kmax) {
    BigRat v = nu.rat();
    for (int k = 1; k <= kmax && k + 1 < (int)w.size(); ++k) {
        BigRat h = BigRat(2 * k + 1, 2);
        BigRat lhs = (k + 2 * v + 1) * (k + 3 * v + 1) * (k + 4 * v + 1) * w[k + 1];
        BigRat rhs = (h + 2 * v) * (20 * h * h + 80 * h * v + 48 * v * v + 3) * w[k] -
                     64 * k * (k + v) * (k + 2 * v) * w[k - 1];
        if (lhs != rhs) return false;
    }
    return true;
}

inline BigRat w5_rec_a(const BigRat& v, const BigRat& m) {
    return 35 * m * m * m * m + 350 * v * m * m * m +
           (1183 * v * v + BigRat(21, 2)) * m * m +
           (1540 * v * v + BigRat(105, 2)) * v * m +
           (600 * v * v * v * v + BigRat(237, 4) * v * v + BigRat(3, 16));
}

inline BigRat w5_rec_b(const BigRat& v, int k) {
    return k * (k + v) * (259 * k * k + 1295 * k * v + 1450 * v * v + 26);
}

/// Four-term recursion for W_5(nu; 2k).
inline bool validate_recursion_w5_values(const std::vector<BigRat>& w, const HalfInt& nu,
                                         int kmax) {
    BigRat v = nu.rat();
    for (int k = 1; k <= kmax && k + 1 < (int)w.size(); ++k) {
        BigRat lhs = (k + 2 * v + 1) * (k + 3 * v + 1) * (k + 4 * v + 1) *
                     (k + 5 * v + 1) * w[k + 1];
        BigRat rhs = w5_rec_a(v, BigRat(2 * k + 1, 2)) * w[k] - w5_rec_b(v, k) * w[k - 1];
        if (k >= 2) rhs += 225 * k * (k - 1) * (k + v) * (k - 1 + v) * w[k - 2];
        if (lhs != rhs) return false;
    }
    return true;
}

inline bool validate_recursion_w3(const HalfInt& nu, int kmax) {
    return validate_recursion_w3_values(MomentTable::build(3, nu, kmax + 1).values, nu, kmax);
}
inline bool validate_recursion_w4(const HalfInt& nu, int kmax) {
    return validate_recursion_w4_values(MomentTable::build(4, nu, kmax + 1).values, nu, kmax);
}
inline bool validate_recursion_w5(const HalfInt& nu, int kmax) {
    return validate_recursion_w5_values(MomentTable::build(5, nu, kmax + 1).values, nu, kmax);
}

// ---- residues of W_3 ----------------------------------------------------

/// V_3(nu; k): normalized residues of W_3(nu; s) at s = -2(nu+k+1), from the
/// three-term recurrence seeded u_{-1} = 0, u_0 = 1.
struct ResidueSeq {
    HalfInt nu;
    std::vector<BigRat> values;

    static ResidueSeq build(const HalfInt& nu, int kmax) {
        if (!nu.is_integer()) throw domain_error("ResidueSeq: integer nu required");
        BigRat v = nu.rat();
        std::vector<BigRat> u(kmax + 1);
        BigRat prev = 0;  // u_{-1}
        u[0] = 1;
        for (int k = 0; k < kmax; ++k) {
            BigRat h = BigRat(2 * k + 1, 2);
            BigRat rhs = (20 * h * h - 20 * h * v - 4 * v * v + 1) / 2 * u[k] -
                         9 * (k - v) * (k - 2 * v) * prev;
            prev = u[k];
            u[k + 1] = rhs / ((k + 1) * (k + v + 1));
        }
        return {nu, std::move(u)};
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "k,value\n";
        for (size_t k = 0; k < values.size(); ++k) os << k << "," << rat_str(values[k]) << "\n";
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["dimension"] = nu.dimension();
        j["values"] = nlohmann::json::array();
        for (const auto& v : values) j["values"].push_back(rat_str(v));
        return j;
    }
};

// ---- generating function for three-step even moments ---------------------

/// Laurent coefficients H(nu; k) of the hypergeometric side of the 3-step
/// generating function, the stored principal-part polynomial q_nu, and the
/// tail H(nu; k), k >= 0, which must equal W_3(nu; 2k).
///
/// q_nu is normalized against the printed q_2: coefficient of x^j is
/// H(nu; j - 2nu), ascending in k and including the k = 0 coefficient.
/// principal[j] = H(nu; -j) are the true principal-part coefficients.
struct Gf3Result {
    LaurentPoly qpoly;
    std::vector<BigRat> tail;       // H(nu; k) for k = 0..kmax
    std::vector<BigRat> principal;  // H(nu; -j) for j = 1..2nu
};

inline Gf3Result gf3_principal_part(int nu, int kmax) {
    if (nu < 0 || kmax < 0) throw domain_error("gf3_principal_part: nu, kmax >= 0");
    // row v ranges over k in [-2v, kmax + 2(nu - v)]
    auto top = [&](int v) { return kmax + 2 * (nu - v); };
    MomentTable base = MomentTable::build(3, HalfInt::from_int(0), top(0));
    std::vector<BigRat> row(base.values);  // H(0; k), k = 0..top(0)
    auto get = [](const std::vector<BigRat>& r, int lo, int k) -> BigRat {
        if (k < lo) return BigRat(0);
        return r[k - lo];
    };
    int lo = 0;
    for (int v = 1; v <= nu; ++v) {
        int nlo = -2 * v;
        std::vector<BigRat> next(top(v) - nlo + 1);
        for (int k = nlo; k <= top(v); ++k) {
            BigRat c2 = BigRat(2) * (k + 1) * (k + 3 * v);
            if (c2 != 0) {
                // 2(k+1)(k+3v) H(v;k) = v^2 H(v-1;k+2) - 3v^2 H(v-1;k+1)
                next[k - nlo] =
                    (BigRat(v) * v * get(row, lo, k + 2) - 3 * BigRat(v) * v * get(row, lo, k + 1)) / c2;
                continue;
            }
            BigRat c1 = BigRat(2) * (k + 2 * v) * (k + 3 * v - 1) * (k + 3 * v);
            if (c1 != 0) {
                // 2(k+2v)(k+3v-1)(k+3v) H(v;k) =
                //   v^2 (7k+15v-4) H(v-1;k+1) - 9 v^2 (k+v) H(v-1;k)
                next[k - nlo] = (BigRat(v) * v * (7 * k + 15 * v - 4) * get(row, lo, k + 1) -
                                 9 * BigRat(v) * v * (k + v) * get(row, lo, k)) /
                                c1;
                continue;
            }
            throw ladder_error("gf3_principal_part: both stepping relations degenerate at k=" +
                               std::to_string(k) + ", nu=" + std::to_string(v));
        }
        row = std::move(next);
        lo = nlo;
    }
    Gf3Result res;
    if (nu > 0) {
        for (int j = 0; j <= 2 * nu; ++j) res.qpoly.add_term(j, row[j]);  // H(nu; j-2nu)
        for (int j = 1; j <= 2 * nu; ++j) res.principal.push_back(row[2 * nu - j]);
    }
    for (int k = 0; k <= kmax; ++k) res.tail.push_back(row[k - lo]);
    return res;
}

// ---- closed polynomial-in-n forms for small even moments -----------------

/// W_n(nu; 2k) for 2k = 2, 4, 6 as closed polynomials in n.
inline BigRat moment_poly_in_n(const HalfInt& nu, int k, int n) {
    BigRat v = nu.rat();
    switch (k) {
        case 1:
            return BigRat(n);
        case 2:
            return BigRat(n) * (n * (v + 2) - 1) / (v + 1);
        case 3:
            return BigRat(n) * (BigRat(n) * n * (v + 2) * (v + 3) - 3 * n * (v + 3) + 4) /
                   ((v + 1) * (v + 1));
        default:
            throw domain_error("moment_poly_in_n: k in {1,2,3}");
    }
}

/// Agreement of the closed forms with the convolution recursion for n = 1..nmax.
inline bool moment_poly_check(const HalfInt& nu, int k, int nmax = 8) {
    for (int n = 1; n <= nmax; ++n)
        if (moment_poly_in_n(nu, k, n) != even_moment_conv(n, nu, k)) return false;
    return true;
}

}  // namespace walker

#pragma once

#include <functional>
#include <map>

#include "walker/const_combo.hpp"
#include "walker/moments.hpp"
#include "walker/odd_dim.hpp"

namespace walker {

/// W_2(nu; s) = nu! Gamma(s+2nu+1) / (Gamma(s/2+nu+1) Gamma(s/2+2nu+1)),
/// valid for all complex s and half-integer nu. At poles of the numerator
/// Gamma returns a signed infinity (sign taken from the right); where only
/// a denominator Gamma poles the value is an exact zero.
inline Real w2_closed(const HalfInt& nu, const Real& s) {
    Real v = nu.real();
    Real a = s + 2 * v + 1, b = s / 2 + v + 1, c = s / 2 + 2 * v + 1;
    bool pa = is_nonpositive_integer(a);
    bool pb = is_nonpositive_integer(b), pc = is_nonpositive_integer(c);
    if (!pa && !pb && !pc)
        return gamma_fn(v + 1) * gamma_fn(a) / (gamma_fn(b) * gamma_fn(c));
    if (!pa) return Real(0);  // denominator blows up, numerator finite
    int den_poles = int(pb) + int(pc);
    if (den_poles == 0) {
        // genuine simple pole: report the right-sided signed infinity
        Real eps = real_eps(working_digits() / 2);
        Real probe = gamma_fn(v + 1) * gamma_fn(a + eps) /
                     (gamma_fn(b + eps / 2) * gamma_fn(c + eps / 2));
        Real inf = std::numeric_limits<Real>::infinity();
        return probe > 0 ? inf : -inf;
    }
    // pole against pole: finite limit, evaluated by a small shift
    Real eps = real_eps(working_digits() / 2);
    return gamma_fn(v + 1) * gamma_fn(a + 2 * eps) /
           (gamma_fn(b + eps) * gamma_fn(c + eps));
}

namespace detail {

// Two-component coefficient vectors over {A, 1/(pi^2 A)} or {A4, B4} with
// exact rational linear algebra; the ladders never leave the plane.
struct Combo2 {
    BigRat a, b;
    Combo2 operator+(const Combo2& o) const { return {a + o.a, b + o.b}; }
    Combo2 operator-(const Combo2& o) const { return {a - o.a, b - o.b}; }
    Combo2 operator*(const BigRat& q) const { return {a * q, b * q}; }
    Combo2 operator/(const BigRat& q) const { return {a / q, b / q}; }
};

template <typename SeedFn, typename StepS, typename StepNu>
Combo2 odd_ladder(int nu, long s, const SeedFn& seed, const StepS& step_s,
                  const StepNu& step_nu, std::map<std::pair<int, long>, Combo2>& memo) {
    if (s % 2 == 0) throw domain_error("odd moment ladder: s must be odd");
    if (s < -2 * nu - 1)
        throw domain_error("odd moment ladder: s below the first pole is refused");
    auto key = std::make_pair(nu, s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Combo2 r{};
    if (nu == 0) {
        if (s == -1 || s == 1) {
            r = seed(s);
        } else {
            // climb in s with the three-term recursion at half-integer k
            r = step_s(s, odd_ladder(0, s - 2, seed, step_s, step_nu, memo),
                       odd_ladder(0, s - 4, seed, step_s, step_nu, memo));
        }
    } else {
        r = step_nu(nu, s, odd_ladder(nu - 1, s + 2, seed, step_s, step_nu, memo),
                    odd_ladder(nu - 1, s + 4, seed, step_s, step_nu, memo));
    }
    memo.emplace(key, r);
    return r;
}

}  // namespace detail

/// Odd moments of three-step walks in even dimensions: exact rational
/// combination over {A, 1/(pi^2 A)}. Seeds W_3(0;-1) = A and
/// W_3(0;1) = A + 6/(pi^2 A); the s-ladder extends the even-moment
/// recursion to half-integer k, the nu-ladder is the dimensional contiguity
/// relation.
inline ConstCombo w3_odd(int nu, long s) {
    if (nu < 0) throw domain_error("w3_odd: nu >= 0");
    static std::map<std::pair<int, long>, detail::Combo2> memo;
    auto seed = [](long ss) -> detail::Combo2 {
        return ss == -1 ? detail::Combo2{1, 0} : detail::Combo2{1, 6};
    };
    auto step_s = [](long ss, const detail::Combo2& wm2,
                     const detail::Combo2& wm4) -> detail::Combo2 {
        // (k+1)^2 W(2k+2) = 1/2 (20(k+1/2)^2 + 1) W(2k) - 9 k^2 W(2k-2), 2k+2 = ss
        BigRat k(ss - 2, 2);
        BigRat lead = (k + 1) * (k + 1);
        if (lead == 0)
            throw ladder_error("w3_odd: degenerate s-step at s=" + std::to_string(ss));
        BigRat h = k + BigRat(1, 2);
        return (wm2 * ((20 * h * h + 1) / 2) - wm4 * (9 * k * k)) / lead;
    };
    auto step_nu = [](int v, long ss, const detail::Combo2& up2,
                      const detail::Combo2& up4) -> detail::Combo2 {
        // (s+1)(s+6v-1) W(v;s-1) + 6v^2 W(v-1;s+1) - 2v^2 W(v-1;s+3) = 0 at s-1 = ss
        BigRat lead = BigRat(ss + 2) * (ss + 6 * v);
        if (lead == 0)
            throw ladder_error("w3_odd: degenerate nu-step at s=" + std::to_string(ss) +
                               ", nu=" + std::to_string(v));
        BigRat v2(v);
        v2 *= v;
        return (up4 * (2 * v2) - up2 * (6 * v2)) / lead;
    };
    auto c = detail::odd_ladder(nu, s, seed, step_s, step_nu, memo);
    return ConstCombo(ConstBasis::w3_odd, {c.a, c.b});
}

/// Odd moments of four-step walks in even dimensions over {A4, B4}.
/// Seeds W_4(0;-1) = 4 A4 and W_4(0;1) = 16 A4 - 48 B4.
inline ConstCombo w4_odd(int nu, long s) {
    if (nu < 0) throw domain_error("w4_odd: nu >= 0");
    static std::map<std::pair<int, long>, detail::Combo2> memo;
    auto seed = [](long ss) -> detail::Combo2 {
        return ss == -1 ? detail::Combo2{4, 0} : detail::Combo2{16, -48};
    };
    auto step_s = [](long ss, const detail::Combo2& wm2,
                     const detail::Combo2& wm4) -> detail::Combo2 {
        // (k+1)^3 W(2k+2) = (k+1/2)(20(k+1/2)^2 + 3) W(2k) - 64 k^3 W(2k-2)
        BigRat k(ss - 2, 2);
        BigRat lead = (k + 1) * (k + 1) * (k + 1);
        if (lead == 0)
            throw ladder_error("w4_odd: degenerate s-step at s=" + std::to_string(ss));
        BigRat h = k + BigRat(1, 2);
        return (wm2 * (h * (20 * h * h + 3)) - wm4 * (64 * k * k * k)) / lead;
    };
    auto step_nu = [](int v, long ss, const detail::Combo2& up2,
                      const detail::Combo2& up4) -> detail::Combo2 {
        // 3(s+2)(s+6v)(s+8v)(s+8v-2) W(v;s) =
        //   8 v^3 (5s+32v-6) W(v-1;s+4) - 256 v^3 (s+4v) W(v-1;s+2)
        BigRat lead = 3 * BigRat(ss + 2) * (ss + 6 * v) * (ss + 8 * v) * (ss + 8 * v - 2);
        if (lead == 0)
            throw ladder_error("w4_odd: degenerate nu-step at s=" + std::to_string(ss) +
                               ", nu=" + std::to_string(v));
        BigRat v3(v);
        v3 = v3 * v3 * v3;
        return (up4 * (8 * v3 * (5 * ss + 32 * v - 6)) - up2 * (256 * v3 * (ss + 4 * v))) /
               lead;
    };
    auto c = detail::odd_ladder(nu, s, seed, step_s, step_nu, memo);
    return ConstCombo(ConstBasis::w4_odd, {c.a, c.b});
}

struct W3DerivAt0 {
    bool exact;        // stored combo (nu <= 2)
    ConstCombo combo;  // meaningful iff exact
    Real value;
};

/// d/ds W_3(nu; s) at s = 0 over {1, sqrt(3)/pi, Cl(pi/3)/pi}. The printed
/// combos cover nu <= 2; beyond that a numeric moment evaluator (typically
/// the Bessel quadrature) must be supplied for central differencing.
inline W3DerivAt0 w3_derivative_at0(
    int nu, const std::function<Real(int, const Real&)>& moment_eval = {}) {
    if (nu >= 0 && nu <= 2) {
        static const std::vector<std::vector<BigRat>> stored = {
            {BigRat(0), BigRat(0), BigRat(1)},
            {BigRat(1, 2), BigRat(-11, 16), BigRat(1)},
            {BigRat(17, 36), BigRat(-181, 320), BigRat(1)},
        };
        ConstCombo c(ConstBasis::w3_deriv, stored[nu]);
        return {true, c, c.value()};
    }
    if (!moment_eval)
        throw unsupported_error("w3_derivative_at0: nu > 2 needs a numeric moment evaluator");
    // central difference with one Richardson step
    Real h = Real(1) / 1000;
    Real d1 = (moment_eval(nu, h) - moment_eval(nu, -h)) / (2 * h);
    Real d2 = (moment_eval(nu, h / 2) - moment_eval(nu, -h / 2)) / h;
    Real value = (4 * d2 - d1) / 3;
    return {false, ConstCombo(), value};
}

}  // namespace walker

#pragma once

#include <vector>

#include "walker/halfint.hpp"
#include "walker/specfun.hpp"

namespace walker {

namespace detail {

/// Power-series j_nu(t) = sum_m (-t^2/4)^m nu!/(m!(m+nu)!), by term
/// recurrence. Loses ~0.43 t digits to cancellation, so callers switch to
/// the asymptotic branch beyond jnu_series_cutoff().
inline Real jnu_series(const Real& nu, const Real& t) {
    Real q = -t * t / 4;
    Real term(1), sum(1);
    Real eps = real_eps(3);
    for (long m = 0; m < 100000; ++m) {
        term *= q / ((m + 1) * (nu + m + 1));
        sum += term;
        if (abs(term) < eps * (abs(sum) + 1)) return sum;
    }
    throw convergence_error("jnu_series: no convergence");
}

/// Hankel large-argument expansion of J_nu, truncated at its smallest term;
/// exact (terminating) for half-odd nu. Returns j_nu = nu!(2/t)^nu J_nu.
inline Real jnu_asymptotic(const Real& nu, const Real& t) {
    Real mu = 4 * nu * nu;
    Real p(1), q(0);
    Real a(1);
    Real last = abs(a);
    for (int k = 1; k < 400; ++k) {
        a *= (mu - (2 * k - 1) * (2 * k - 1)) / (8 * k * t);
        if (a == 0) break;
        Real mag = abs(a);
        if (mag >= last && k > 4) break;  // optimal truncation
        last = mag;
        switch (k % 4) {
            case 0: p += a; break;
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
        }
        if (mag < real_eps(3)) break;
    }
    Real omega = t - (nu / 2 + Real(1) / 4) * real_pi();
    Real jbig = sqrt(2 / (real_pi() * t)) * (cos(omega) * p - sin(omega) * q);
    return gamma_fn(nu + 1) * pow(2 / t, nu) * jbig;
}

inline double jnu_series_cutoff() { return 0.9 * working_digits() + 5; }

}  // namespace detail

/// Normalized Bessel function j_nu(t) = nu!(2/t)^nu J_nu(t), j_nu(0) = 1.
inline Real jnu(const Real& nu, const Real& t) {
    if (t < 0) throw domain_error("jnu: t >= 0 required");
    if (t == 0) return Real(1);
    if (t < detail::jnu_series_cutoff()) return detail::jnu_series(nu, t);
    return detail::jnu_asymptotic(nu, t);
}

inline Real jnu(const HalfInt& nu, const Real& t) { return jnu(nu.real(), t); }

/// j_{nu+i}(t) for i = 0..count-1. Above the orders involved the three-term
/// recurrence j_{b+1} = 4b(b+1)/t^2 (j_b - j_{b-1}) fills the ladder from
/// two directly computed seeds; below it the subtraction cancels, so each
/// order is summed directly (the series is short there anyway).
inline std::vector<Real> jnu_ladder(const Real& nu, int count, const Real& t) {
    std::vector<Real> out(count);
    if (count <= 0) return out;
    if (t == 0) {
        for (auto& v : out) v = 1;
        return out;
    }
    if (count <= 2 || t < 2 * (nu.convert_to<double>() + count + 2)) {
        for (int i = 0; i < count; ++i) out[i] = jnu(nu + i, t);
        return out;
    }
    out[0] = jnu(nu, t);
    out[1] = jnu(nu + 1, t);
    Real t2 = t * t;
    for (int i = 2; i < count; ++i) {
        Real b = nu + (i - 1);
        out[i] = 4 * b * (b + 1) / t2 * (out[i - 1] - out[i - 2]);
    }
    return out;
}

}  // namespace walker

#pragma once

#include "walker/halfint.hpp"
#include "walker/piecewise.hpp"

namespace walker {

/// The single-step convolution kernel for dimension d = 2m+1:
/// Gamma(m+1/2)/(Gamma(1/2)Gamma(m)) (1-x^2)^(m-1) on [-1,1], stored x >= 0.
/// The Gamma ratio is the rational (2m-1)!!/(2^m (m-1)!).
inline PiecewiseFn odd_dim_kernel(int m) {
    if (m < 1) throw domain_error("odd_dim_kernel: m >= 1 required");
    BigRat c(double_factorial_odd(m), BigInt(1) << m);
    c /= BigRat(factorial_int(m - 1));
    LaurentPoly p;
    for (int i = 0; i <= m - 1; ++i) {
        BigRat coef = c * BigRat(binomial_int(m - 1, i));
        if (i % 2 == 1) coef = -coef;
        p.add_term(2 * i, coef);
    }
    return PiecewiseFn({BigRat(0), BigRat(1)}, {p}, Parity::even);
}

/// n-fold convolution power P_{m,n} of the kernel.
inline PiecewiseFn odd_dim_kernel_power(int m, int n) {
    PiecewiseFn kernel = odd_dim_kernel(m);
    PiecewiseFn acc = kernel;
    for (int i = 1; i < n; ++i) acc = convolve(acc, kernel);
    return acc;
}

/// Exact density of an n-step walk in dimension d = 2m+1:
/// p_n(m - 1/2; x) = (2x)^{2m} Gamma(m)/Gamma(2m) (-(1/2x) d/dx)^m P_{m,n}(x).
inline PiecewiseFn density_odd_dim(int n, int m) {
    if (n < 2) throw domain_error("density_odd_dim: n >= 2 required");
    PiecewiseFn p = apply_half_derivative_operator(odd_dim_kernel_power(m, n), m);
    BigRat scale = BigRat(BigInt(1) << (2 * m)) * BigRat(factorial_int(m - 1));
    scale /= BigRat(factorial_int(2 * m - 1));
    PiecewiseFn out = p.map_pieces(
        [&](const LaurentPoly& q) { return (q * scale).shift_exponents(2 * m); },
        Parity::none);
    if (out.min_exponent() < 0)
        throw error("density_odd_dim: negative exponent survived the x^{2m} prefactor");
    return out;
}

/// Moment function of an odd-dimension density, exact where rational.
class OddDimMoment {
  public:
    OddDimMoment(int n, int m) : n_(n), m_(m), density_(density_odd_dim(n, m)) {}

    int n_steps() const { return n_; }
    HalfInt nu() const { return HalfInt(2 * m_ - 1); }
    const PiecewiseFn& density() const { return density_; }

    /// Exact rational value at integer s; pole_error at genuine poles,
    /// error where the value picks up a log (removable singularities of the
    /// closed forms land there; use eval for those).
    BigRat exact(long s) const { return density_.moment_exact(s); }

    Real eval(const Real& s) const { return density_.moment_real(s); }

  private:
    int n_, m_;
    PiecewiseFn density_;
};

}  // namespace walker

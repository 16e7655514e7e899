#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "walker/real.hpp"

namespace walker {

using BigInt = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational. GMP keeps it canonical: denominator > 0,
/// gcd(|num|, den) = 1 after every operation.
using BigRat = boost::multiprecision::mpq_rational;

inline BigInt rat_num(const BigRat& q) { return numerator(q); }
inline BigInt rat_den(const BigRat& q) { return denominator(q); }

inline BigInt factorial_int(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step
    }
    return r;
}

inline BigInt double_factorial_odd(unsigned m) {
    // (2m-1)!! with the empty product = 1
    BigInt r = 1;
    for (unsigned i = 1; i <= m; ++i) r *= 2 * i - 1;
    return r;
}

/// Pochhammer (a)_m = a (a+1) ... (a+m-1), exact for rational a.
inline BigRat rising(const BigRat& a, unsigned m) {
    BigRat r = 1;
    BigRat x = a;
    for (unsigned i = 0; i < m; ++i, x += 1) r *= x;
    return r;
}

inline BigRat rat_pow(BigRat base, long e) {
    if (e < 0) {
        if (base == 0) throw domain_error("rat_pow: zero to negative power");
        base = 1 / base;
        e = -e;
    }
    BigRat r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::string rat_str(const BigRat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline BigRat rat_parse(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
}

inline Real to_real(const BigRat& q) { return Real(q); }
inline Real to_real(const BigInt& n) { return Real(n); }

}  // namespace walker

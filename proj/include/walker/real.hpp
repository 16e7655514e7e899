#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace walker {

/// Extended-precision real. Precision is set process-wide in decimal digits
/// (default 50, overridable via WALKER_PRECISION) before any value is made.
using Real = boost::multiprecision::mpfr_float;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : error {
    using error::error;
};
struct pole_error : error {
    using error::error;
};
struct convergence_error : error {
    using error::error;
};
struct accuracy_error : error {
    using error::error;
};
struct ladder_error : error {
    using error::error;
};
struct unsupported_error : error {
    using error::error;
};

inline int& working_digits_store() {
    static int digits = 0;
    return digits;
}

inline void set_working_digits(int digits) {
    if (digits < 10 || digits > 100000)
        throw domain_error("set_working_digits: digits out of range");
    working_digits_store() = digits;
    Real::default_precision(digits);
}

inline int default_digits_from_env() {
    if (const char* s = std::getenv("WALKER_PRECISION")) {
        int d = std::atoi(s);
        if (d >= 10 && d <= 100000) return d;
    }
    return 50;
}

inline int working_digits() {
    if (working_digits_store() == 0)
        set_working_digits(default_digits_from_env());
    return working_digits_store();
}

namespace detail {
struct precision_init {
    precision_init() { (void)working_digits(); }
};
inline const precision_init precision_init_instance{};
}  // namespace detail

inline const Real& real_pi() {
    static const Real pi = 4 * atan(Real(1));
    return pi;
}

inline Real real_eps(int digits_margin = 5) {
    return pow(Real(10), -(working_digits() - digits_margin));
}

}  // namespace walker

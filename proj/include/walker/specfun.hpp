#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "walker/gauss.hpp"
#include "walker/rational.hpp"

namespace walker {

inline bool is_nonpositive_integer(const Real& x) {
    return x <= 0 && floor(x) == x;
}

/// Gamma function at working precision (MPFR underneath).
inline Real gamma_fn(const Real& x) {
    if (is_nonpositive_integer(x))
        throw pole_error("gamma: pole at " + x.convert_to<std::string>());
    return tgamma(x);
}

// ---- generalized hypergeometric series ------------------------------------

struct HypSeriesSpec {
    std::vector<Real> upper;
    std::vector<Real> lower;
    Real argument;
    long max_terms = 200000;
    Real tol = 0;  // 0: pick from working precision
};

struct PfqResult {
    Real value;
    long terms_used;
};

namespace detail {

/// Index at which an upper parameter terminates the series, or -1.
inline long pfq_termination(const std::vector<Real>& upper) {
    long stop = -1;
    for (const auto& a : upper)
        if (is_nonpositive_integer(a)) {
            long m = (-a).convert_to<long>() + 1;  // (a)_m = 0 first at m = -a+1
            if (stop < 0 || m < stop) stop = m;
        }
    return stop;
}

}  // namespace detail

/// Partial-sum evaluation with forward term recurrence
/// term_{m+1}/term_m = prod(a_i+m)/prod(b_j+m) * z/(m+1).
/// No transformations are applied; callers pick convergent domains.
inline PfqResult pfq(const HypSeriesSpec& spec) {
    const auto& a = spec.upper;
    const auto& b = spec.lower;
    const Real& z = spec.argument;
    Real tol = spec.tol > 0 ? spec.tol : real_eps(8);

    long stop = detail::pfq_termination(a);
    for (const auto& bj : b)
        if (is_nonpositive_integer(bj) && (stop < 0 || -bj.convert_to<long>() < stop))
            throw domain_error("pfq: nonpositive-integer lower parameter");
    if (stop < 0) {
        if (a.size() > b.size() + 1)
            throw convergence_error("pfq: series diverges for p > q + 1");
        if (a.size() == b.size() + 1) {
            if (abs(z) > 1) throw convergence_error("pfq: |argument| > 1 with p = q + 1");
            if (abs(z) == 1) {
                Real margin = 0;
                for (const auto& bj : b) margin += bj;
                for (const auto& ai : a) margin -= ai;
                if (!(z == 1 && margin > 0))
                    throw convergence_error("pfq: no convergence margin at |argument| = 1");
            }
        }
    }

    Real term(1), sum(1);
    int small_streak = 0;
    for (long m = 0;; ++m) {
        if (stop >= 0 && m + 1 >= stop) return {sum, m + 1};
        if (m >= spec.max_terms)
            throw convergence_error("pfq: max_terms exceeded; partial value " +
                                    sum.convert_to<std::string>());
        Real ratio = z / (m + 1);
        for (const auto& ai : a) ratio *= ai + m;
        for (const auto& bj : b) ratio /= bj + m;
        term *= ratio;
        sum += term;
        if (abs(term) < tol * abs(sum)) {
            if (++small_streak >= 3) return {sum, m + 1};
        } else {
            small_streak = 0;
        }
    }
}

inline Real pfq(std::vector<Real> upper, std::vector<Real> lower, const Real& z) {
    return pfq(HypSeriesSpec{std::move(upper), std::move(lower), z}).value;
}

/// pFq at argument exactly 1 with convergence margin sigma = sum(b) - sum(a)
/// in (0, +inf): partial sums obey S_M = S + M^(-sigma)(c0 + c1/M + ...), so
/// Richardson extrapolation over doubling checkpoints recovers S far faster
/// than the raw tail.
inline Real pfq_at_one(const std::vector<Real>& upper, const std::vector<Real>& lower,
                       long base_terms = 2048, int levels = 6) {
    Real sigma = 0;
    for (const auto& bj : lower) sigma += bj;
    for (const auto& ai : upper) sigma -= ai;
    if (sigma <= 0) throw convergence_error("pfq_at_one: nonpositive convergence margin");

    std::vector<Real> s(levels);
    Real term(1), sum(1);
    long m = 0;
    for (int i = 0; i < levels; ++i) {
        long target = base_terms << i;
        for (; m < target; ++m) {
            Real ratio = Real(1) / (m + 1);
            for (const auto& ai : upper) ratio *= ai + m;
            for (const auto& bj : lower) ratio /= bj + m;
            term *= ratio;
            sum += term;
        }
        s[i] = sum;
    }
    for (int j = 0; j < levels - 1; ++j) {
        Real f = pow(Real(2), sigma + j);
        for (int i = 0; i < levels - 1 - j; ++i) s[i] = (f * s[i + 1] - s[i]) / (f - 1);
    }
    return s[0];
}

// ---- complete elliptic integral via AGM -----------------------------------

/// K'(k) = K(sqrt(1-k^2)) = pi / (2 agm(1, k)) for 0 < k <= 1.
inline Real elliptic_Kprime(const Real& k) {
    if (!(k > 0) || k > 1) throw domain_error("elliptic_Kprime: need 0 < k <= 1");
    Real a(1), b(k);
    while (abs(a - b) > real_eps(3) * a) {
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return real_pi() / (2 * a);
}

// ---- named constants -------------------------------------------------------

namespace detail {

/// Clausen value Cl_2(pi/3) from its L-series sum sin(k pi/3)/k^2, grouped in
/// period-6 blocks, with Richardson acceleration of the (1/M^2) partial-sum
/// tail over doubling block counts.
inline Real clausen_pi3_lseries(long base_blocks = 256, int levels = 8) {
    std::vector<Real> s(levels);
    Real sum = 0;
    long j = 0;
    for (int i = 0; i < levels; ++i) {
        long target = base_blocks << i;
        for (; j < target; ++j) {
            Real b = Real(1) / ((6 * j + 1) * Real(6 * j + 1)) +
                     Real(1) / ((6 * j + 2) * Real(6 * j + 2)) -
                     Real(1) / ((6 * j + 4) * Real(6 * j + 4)) -
                     Real(1) / ((6 * j + 5) * Real(6 * j + 5));
            sum += b;
        }
        s[i] = sum;
    }
    for (int jj = 0; jj < levels - 1; ++jj) {
        Real f = pow(Real(2), 2 + jj);
        for (int i = 0; i < levels - 1 - jj; ++i) s[i] = (f * s[i + 1] - s[i]) / (f - 1);
    }
    return sqrt(Real(3)) / 2 * s[0];
}

/// integral_0^1 k^p K'(k)^2 dk after k = sin(theta), with the log^2
/// endpoint singularity tamed by dyadically graded panels toward 0.
inline Real kprime_sq_integral(int p) {
    int order = 32;
    Real hi = real_pi() / 2;
    Real total = 0;
    int panels = (working_digits() * 10) / 3 + 12;
    for (int i = 0; i < panels; ++i) {
        Real lo = hi / 2;
        total += gauss_integrate(
            [&](const Real& th) {
                Real k = sin(th);
                Real kp = elliptic_Kprime(k);
                Real v = kp * kp * cos(th);
                return p == 0 ? v : v * pow(k, p);
            },
            lo, hi, order);
        hi = lo;
    }
    return total;
}

}  // namespace detail

/// Registry of the named constants; computed lazily at working precision and
/// cached.
class ConstantRegistry {
  public:
    static const Real& get(const std::string& name) {
        static std::map<std::string, Real> cache;
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
        return cache.emplace(name, compute(name)).first->second;
    }

    static std::vector<std::string> names() {
        return {"pi", "sqrt3", "A", "A4", "B4", "r50", "Cl_pi_3"};
    }

    static nlohmann::json dump() {
        nlohmann::json j;
        j["digits"] = working_digits();
        for (const auto& n : names())
            j["constants"][n] = get(n).convert_to<std::string>();
        return j;
    }

  private:
    static Real compute(const std::string& name) {
        const Real pi = real_pi();
        if (name == "pi") return pi;
        if (name == "sqrt3") return sqrt(Real(3));
        if (name == "A")  // W_3(0; -1)
            return Real(3) / 16 * pow(Real(2), Real(1) / 3) / pow(pi, 4) *
                   pow(gamma_fn(Real(1) / 3), 6);
        if (name == "A4") return detail::kprime_sq_integral(0) / pow(pi, 3);
        if (name == "B4") return detail::kprime_sq_integral(2) / pow(pi, 3);
        if (name == "r50")
            return sqrt(Real(5)) / 40 * gamma_fn(Real(1) / 15) * gamma_fn(Real(2) / 15) *
                   gamma_fn(Real(4) / 15) * gamma_fn(Real(8) / 15) / pow(pi, 4);
        if (name == "Cl_pi_3") return detail::clausen_pi3_lseries();
        throw domain_error("ConstantRegistry: unknown constant " + name);
    }
};

inline const Real& constant(const std::string& name) { return ConstantRegistry::get(name); }

}  // namespace walker

#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "walker/real.hpp"

namespace walker {

/// Gauss-Legendre rule on [-1, 1] at working precision.
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

inline GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real one(1);
    for (int i = 1; i <= (n + 1) / 2; ++i) {
        // Newton from the classical double-precision estimate; quadratic
        // convergence needs only a handful of refinements at any precision.
        Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
        Real dp(0);
        for (int it = 0; it < 40; ++it) {
            Real p0(1), p1(0);
            for (int j = 0; j < n; ++j) {
                Real p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            dp = n * (x * p0 - p1) / (x * x - 1);
            Real dx = p0 / dp;
            x -= dx;
            if (abs(dx) < real_eps(3) * (abs(x) + 1)) break;
        }
        rule.nodes[i - 1] = -x;
        rule.nodes[n - i] = x;
        Real w = 2 / ((one - x * x) * dp * dp);
        rule.weights[i - 1] = w;
        rule.weights[n - i] = w;
    }
    return rule;
}

}  // namespace detail

inline const GaussRule& gauss_rule(int n) {
    static std::map<std::pair<int, int>, GaussRule> cache;
    auto key = std::make_pair(n, working_digits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::make_gauss_rule(n)).first;
    return it->second;
}

/// Integrate f over [a, b] with a fixed-order rule.
template <typename F>
Real gauss_integrate(const F& f, const Real& a, const Real& b, int order = 32) {
    const GaussRule& g = gauss_rule(order);
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real s = 0;
    for (size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(mid + half * g.nodes[i]);
    return s * half;
}

}  // namespace walker

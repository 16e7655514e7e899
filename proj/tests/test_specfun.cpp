#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "walker/moments.hpp"
#include "walker/specfun.hpp"

using namespace walker;

namespace {

Real err(const Real& a, const Real& b) { return abs(a - b); }

Real frozen(const char* s) { return Real(s); }

// Terminating pFq summed exactly in BigRat; the independent bridge for the
// floating evaluator.
BigRat pfq_terminating_exact(const std::vector<BigRat>& upper, const std::vector<BigRat>& lower,
                             const BigRat& z, int stop) {
    BigRat term = 1, sum = 1;
    for (int m = 0; m < stop; ++m) {
        BigRat ratio = z / (m + 1);
        for (const auto& a : upper) ratio *= a + m;
        for (const auto& b : lower) ratio /= b + m;
        term *= ratio;
        sum += term;
    }
    return sum;
}

// Bernoulli numbers B_0..B_{count-1} by the defining recurrence.
std::vector<BigRat> bernoulli(int count) {
    std::vector<BigRat> b(count);
    b[0] = 1;
    for (int m = 1; m < count; ++m) {
        BigRat s = 0;
        for (int j = 0; j < m; ++j) s += BigRat(binomial_int(m + 1, j)) * b[j];
        b[m] = -s / (m + 1);
    }
    return b;
}

// Independent Clausen route: Cl2(t) = t - t log t + sum_m zeta(2m) t^(2m+1) /
// (m(2m+1)(2pi)^(2m)) with zeta(2m)/(2pi)^(2m) = |B_2m| / (2 (2m)!).
Real clausen_via_bernoulli(const Real& t) {
    auto B = bernoulli(80);
    Real sum = t - t * log(t);
    Real t2 = t * t;
    Real tp = t * t2;  // t^(2m+1) at m=1
    BigInt fact = 2;   // (2m)! at m=1
    for (int m = 1; 2 * m < 80; ++m) {
        if (m > 1) {
            fact *= BigInt(2 * m) * (2 * m - 1);
            tp *= t2;
        }
        Real term = to_real(abs(B[2 * m])) / (2 * to_real(fact)) * tp / (m * (2 * m + 1));
        sum += term;
        if (term < real_eps(5)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("gamma basics and poles") {
    REQUIRE(err(gamma_fn(Real(1) / 2), sqrt(real_pi())) < real_eps(8));
    REQUIRE(err(gamma_fn(Real(5)), Real(24)) < real_eps(8));
    REQUIRE_THROWS_AS(gamma_fn(Real(0)), pole_error);
    REQUIRE_THROWS_AS(gamma_fn(Real(-3)), pole_error);
}

TEST_CASE("constant A and its printed identity") {
    const Real& A = constant("A");
    REQUIRE(err(A, frozen("0.8964407887767628642327709000349704991387")) < 1e-35);
    Real avg3 = A + 6 / (real_pi() * real_pi() * A);
    REQUIRE(abs(avg3 - Real("1.5746")) < 5e-5);  // the printed four digits
}

TEST_CASE("r50 and Clausen registry values") {
    REQUIRE(err(constant("r50"), frozen("0.3299338010600640590397906522869529646937")) < 1e-35);
    const Real& cl = constant("Cl_pi_3");
    REQUIRE(err(cl, frozen("1.014941606409653625021202554274520285942")) < 1e-30);
    // dual route: zeta/Bernoulli tail series
    REQUIRE(err(cl, clausen_via_bernoulli(real_pi() / 3)) < 1e-30);
}

TEST_CASE("registry dump is machine readable") {
    nlohmann::json j = ConstantRegistry::dump();
    REQUIRE(j["digits"].get<int>() == working_digits());
    REQUIRE(j["constants"].contains("A4"));
    REQUIRE_THROWS_AS(constant("no_such"), domain_error);
}

TEST_CASE("pfq identity and basic series") {
    // 2F1(a, b; c; 0) = 1
    REQUIRE(pfq({Real(3) / 7, Real(2)}, {Real(5) / 3}, Real(0)) == 1);

    // generating function for two-step even moments at x = 0.1, nu = 1
    Real x = Real(1) / 10;
    Real lhs = pfq({Real(1), Real(3) / 2}, {Real(3)}, 4 * x);
    MomentTable t = MomentTable::build(2, HalfInt::from_int(1), 85);
    Real rhs = 0, xp = 1;
    for (int k = 0; k <= 85; ++k, xp *= x) rhs += to_real(t.values[k]) * xp;
    REQUIRE(err(lhs, rhs) < 1e-30);
}

TEST_CASE("terminating pfq equals the exact rational sum") {
    // 3F2(-k, -k-nu, nu+1/2; nu+1, 2nu+1; 4) = W_3(nu; 2k)
    Real v12 = pfq({Real(-2), Real(-3), Real(3) / 2}, {Real(2), Real(3)}, Real(4));
    REQUIRE(err(v12, Real(12)) < real_eps(10));

    for (int nu = 0; nu <= 2; ++nu) {
        for (int k = 0; k <= 5; ++k) {
            BigRat exact = pfq_terminating_exact(
                {BigRat(-k), BigRat(-k - nu), BigRat(2 * nu + 1, 2)},
                {BigRat(nu + 1), BigRat(2 * nu + 1)}, BigRat(4), k + nu + 1);
            REQUIRE(exact == even_moment_conv(3, HalfInt::from_int(nu), k));
            Real num = pfq({Real(-k), Real(-k - nu), Real(2 * nu + 1) / 2},
                           {Real(nu + 1), Real(2 * nu + 1)}, Real(4));
            REQUIRE(err(num, to_real(exact)) < real_eps(10));
        }
    }
}

TEST_CASE("the improbable evaluation") {
    Real v = pfq({Real(19) / 11, Real(1), Real(1), Real(1), Real(1)},
                 {Real(8) / 11, Real(4) / 3, Real(3) / 2, Real(5) / 3}, Real(16) / 27);
    REQUIRE(err(v, 3 * real_pi() * real_pi() / 16) < 1e-10);
}

TEST_CASE("pfq convergence guards") {
    REQUIRE_THROWS_AS(pfq({Real(1), Real(1)}, {Real(2)}, Real(3) / 2), convergence_error);
    REQUIRE_THROWS_AS(pfq({Real(1), Real(2), Real(3)}, {Real(2)}, Real(1) / 2),
                      convergence_error);
    // z = 1 without margin
    REQUIRE_THROWS_AS(pfq({Real(1) / 2, Real(1)}, {Real(1) / 2}, Real(1)), convergence_error);
    // nonpositive integer lower parameter
    REQUIRE_THROWS_AS(pfq({Real(1) / 2}, {Real(-2)}, Real(1) / 3), domain_error);
    // max_terms exceeded reports non-convergence
    HypSeriesSpec slow{{Real(1) / 2, Real(1) / 2}, {Real(1)}, Real(99) / 100, 50, Real(0)};
    REQUIRE_THROWS_AS(pfq(slow), convergence_error);
}

TEST_CASE("pfq at argument one via Richardson checkpoints") {
    // Gauss: 2F1(a,b;c;1) = G(c)G(c-a-b)/(G(c-a)G(c-b))
    Real a = Real(1) / 3, b = Real(1) / 4, c = Real(2);
    Real gauss = gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b));
    REQUIRE(err(pfq_at_one({a, b}, {c}), gauss) < 1e-20);
    // half-integer margin ladder
    Real a2 = Real(1) / 2, b2 = Real(1) / 2, c2 = Real(3) / 2;
    Real gauss2 = gamma_fn(c2) * gamma_fn(c2 - a2 - b2) / (gamma_fn(c2 - a2) * gamma_fn(c2 - b2));
    REQUIRE(err(pfq_at_one({a2, b2}, {c2}), gauss2) < 1e-15);
    REQUIRE_THROWS_AS(pfq_at_one({Real(2), Real(1)}, {Real(2)}), convergence_error);
}

TEST_CASE("elliptic K' via AGM") {
    Real k = 1 / sqrt(Real(2));
    Real classical = pow(gamma_fn(Real(1) / 4), 2) / (4 * sqrt(real_pi()));
    REQUIRE(err(elliptic_Kprime(k), classical) < real_eps(8));
    REQUIRE_THROWS_AS(elliptic_Kprime(Real(0)), domain_error);

    // AGM iterates contract superlinearly
    Real a(1), b(Real(3) / 10);
    std::vector<Real> gaps;
    for (int i = 0; i < 5; ++i) {
        gaps.push_back(abs(a - b));
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    for (size_t i = 1; i + 1 < gaps.size(); ++i)
        REQUIRE(gaps[i + 1] < gaps[i] * gaps[i] / gaps[i - 1]);

    // cross-evaluation against the hypergeometric route at random moduli
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unif(0.3, 0.95);
    for (int i = 0; i < 10; ++i) {
        Real kk(unif(rng));
        Real series = real_pi() / 2 * pfq({Real(1) / 2, Real(1) / 2}, {Real(1)}, 1 - kk * kk);
        REQUIRE(err(elliptic_Kprime(kk), series) < 1e-12);
    }
}

TEST_CASE("A4 and B4: elliptic integrals vs their 7F6 forms") {
    const Real& A4 = constant("A4");
    const Real& B4 = constant("B4");
    REQUIRE(err(A4, frozen("0.2256821445809587060475983496931907462576")) < 1e-25);
    REQUIRE(err(B4, frozen("0.03774628819692683881727022394260297979282")) < 1e-25);

    Real h = Real(1) / 2;
    Real f1 = real_pi() / 16 *
              pfq_at_one({Real(5) / 4, h, h, h, h, h, h},
                         {Real(1) / 4, Real(1), Real(1), Real(1), Real(1), Real(1)}, 4096, 7);
    REQUIRE(err(A4, f1) < 1e-10);
    Real t32 = Real(3) / 2;
    Real f2 = 3 * real_pi() / 256 *
              pfq_at_one({Real(7) / 4, t32, t32, h, h, h, h},
                         {Real(3) / 4, Real(2), Real(2), Real(2), Real(2), Real(1)}, 4096, 7);
    REQUIRE(err(B4, f2) < 1e-10);

    // 16 A4 - 48 B4 > 0 (it is the average four-step planar distance)
    REQUIRE(16 * A4 - 48 * B4 > 0);
}

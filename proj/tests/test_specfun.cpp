#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fracsum/bernoulli.hpp"
#include "fracsum/specfun.hpp"
#include "oracles.hpp"

using namespace fracsum;
using testutil::close;
using testutil::oracle_digamma;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("zeta at integers") {
    CHECK(close(zeta_int(2), pi * pi / 6.0, 1e-14));
    CHECK(close(zeta_int(4), pi * pi * pi * pi / 90.0, 1e-14));
    CHECK(close(zeta_int(3), testutil::kZeta3, 1e-14));
    CHECK(close(zeta_int(5), testutil::kZeta5, 1e-14));
    CHECK(close(zeta_int(7), 1.0083492773819228, 1e-14));
    CHECK(close(zeta_int(0), -0.5, 0.0));
    CHECK(close(zeta_int(-1), Complex(-1.0 / 12.0, 0.0), 1e-17));
    CHECK(close(zeta_int(-2), 0.0, 0.0));
    CHECK_THROWS_AS(zeta_int(1), PoleError);
}

TEST_CASE("zeta(1-a) rides the Bernoulli code path exactly") {
    for (int a = 1; a <= 20; ++a) {
        const Complex lhs = zeta_int(1 - a);
        const Complex rhs(-bernoulli_d(a, BernoulliConvention::plus) / a, 0.0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("digamma reference values") {
    CHECK(close(digamma(1.0), -euler_gamma, 1e-14));
    CHECK(close(digamma(2.0), 1.0 - euler_gamma, 1e-14));
    // psi(3/2) = 2 - 2 ln 2 - gamma, cross-checked by the series oracle
    const Complex expected(2.0 - 2.0 * testutil::kLn2 - euler_gamma, 0.0);
    CHECK(close(digamma(1.5), expected, 1e-13));
    CHECK(close(oracle_digamma(1.5), expected, 1e-12));
}

TEST_CASE("digamma agrees with the series oracle at complex points") {
    const Complex points[] = {{1.0, 1.0}, {-2.5, 3.0}, {10.0, -4.0}, {0.3, -0.2}, {-4.75, 0.01}};
    for (const Complex z : points) {
        const Complex ref = oracle_digamma(z);
        CHECK(testutil::rel_err(digamma(z), ref) <= 1e-12);
    }
}

TEST_CASE("polygamma reference values") {
    CHECK(close(polygamma(1, 1.0), zeta_int(2), 1e-13));
    CHECK(close(polygamma(2, 1.0), -2.0 * zeta_int(3), 1e-12));
    CHECK(close(polygamma(1, 2.0), zeta_int(2) - 1.0, 1e-13));
    CHECK(polygamma(0, 1.5) == digamma(1.5));
}

TEST_CASE("ln_gamma reference values") {
    CHECK(close(ln_gamma(1.0), 0.0, 1e-14));
    CHECK(close(ln_gamma(5.0), std::log(24.0), 1e-13));
    CHECK(close(ln_gamma(0.5), 0.5 * std::log(pi), 1e-13));
    // product recurrence: Gamma(1/2 + 3) = (1/2)(3/2)(5/2) sqrt(pi)
    const Complex lhs = ln_gamma(3.5);
    const Complex rhs = std::log(0.5 * 1.5 * 2.5 * std::sqrt(pi));
    CHECK(close(lhs, rhs, 1e-13));
}

TEST_CASE("poles raise pole errors") {
    CHECK_THROWS_AS(digamma(0.0), PoleError);
    CHECK_THROWS_AS(digamma(-3.0), PoleError);
    CHECK_THROWS_AS(polygamma(2, -1.0), PoleError);
    CHECK_THROWS_AS(ln_gamma(0.0), PoleError);
    CHECK_THROWS_AS(ln_gamma(-7.0), PoleError);
}

TEST_CASE("recurrences at random points (seeded property sweep)") {
    testutil::Rng rng(20240811);
    for (int j = 0; j < 1000; ++j) {
        Complex z;
        do {
            z = rng.box(-5.0, 20.0, -20.0, 20.0);
        } while ([&] {
            double m = std::round(-z.real());
            if (m < 0.0) m = 0.0;
            return std::hypot(z.real() + m, z.imag()) < 1e-3;
        }());
        // residuals scale by the largest participating value: near a pole the
        // two psi values cancel and carry only ~1e-15 relative accuracy each
        const Complex jump = 1.0 / z;
        const Complex dhi = digamma(z + 1.0);
        CHECK(std::abs(dhi - digamma(z) - jump) /
                  std::max({1.0, std::abs(jump), std::abs(dhi)}) <=
              1e-12);
        const int n = rng.integer(1, 6);
        double nfact = 1.0;
        for (int i = 2; i <= n; ++i) nfact *= i;
        const Complex pjump = (n % 2 == 0 ? 1.0 : -1.0) * nfact / pow_int(z, n + 1);
        const Complex phi = polygamma(n, z + 1.0);
        CHECK(std::abs(phi - polygamma(n, z) - pjump) /
                  std::max({1.0, std::abs(pjump), std::abs(phi)}) <=
              1e-10);
    }
    for (int j = 0; j < 500; ++j) {
        const double x = rng.uniform(1e-3, 50.0);
        CHECK(std::abs(ln_gamma(Complex(x + 1.0, 0.0)) - ln_gamma(Complex(x, 0.0)) -
                       std::log(Complex(x, 0.0))) <= 1e-11);
    }
}

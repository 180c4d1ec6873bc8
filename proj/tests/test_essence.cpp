#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fracsum/bernoulli.hpp"
#include "fracsum/essence.hpp"
#include "fracsum/parser.hpp"
#include "fracsum/specfun.hpp"
#include "fracsum/verify.hpp"
#include "oracles.hpp"

using namespace fracsum;
using testutil::close;

namespace {
constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);
}

TEST_CASE("closed-form essences of the catalog rows") {
    CHECK(close(essence(CatalogExpr::monomial(2)).value, 1.0 / 6.0, 1e-15));
    CHECK(close(essence(CatalogExpr::logarithm()).value, -euler_gamma, 1e-15));
    CHECK(close(essence(CatalogExpr::exponential(pi * I)).value, Complex(0.0, pi / 2.0), 1e-14));
    CHECK(close(essence(CatalogExpr::exp_times_x(pi * I)).value, Complex(0.5, pi / 4.0), 1e-14));
    CHECK(close(essence(parse_catalog("1/(k*(k+1))")).value, 1.0, 1e-13));
    CHECK(close(essence(CatalogExpr::inverse_monomial(2)).value, 2.0 * testutil::kZeta3, 1e-13));
    CHECK(essence(CatalogExpr::zero()).value == Complex(0.0));
}

TEST_CASE("shifted terms pick up the fractional sum of the derivative") {
    // ess(1/(x+1)) = zeta(2) - 1  (equivalently psi'(2))
    const Complex got = essence(CatalogExpr::inverse_monomial(1, 1.0)).value;
    CHECK(close(got, polygamma(1, 2.0), 1e-13));
    // ess(ln(x+s)) = psi(s+1)
    const Complex s(0.7, 0.3);
    CHECK(close(essence(CatalogExpr::logarithm(s)).value, digamma(s + 1.0), 1e-13));
    // shift landing on the pole lattice propagates the pole error
    CHECK_THROWS_AS(essence(CatalogExpr::inverse_monomial(1, -1.0)), PoleError);
}

TEST_CASE("numeric-limit essences agree with the closed forms") {
    const EssenceResult ln_num = essence_numeric(CatalogExpr::logarithm());
    CHECK(ln_num.provenance == EssenceProvenance::numeric_limit);
    CHECK(close(ln_num.value, -euler_gamma, 1e-6));

    CHECK(close(essence_numeric(CatalogExpr::monomial(3)).value,
                bernoulli_d(3, BernoulliConvention::plus), 1e-8));
    CHECK(close(essence_numeric(CatalogExpr::inverse_monomial(1)).value, zeta_int(2), 1e-6));
    CHECK(close(essence_numeric(CatalogExpr::exp_times_x(pi * I)).value, Complex(0.5, pi / 4.0),
                1e-6));
    CHECK_THROWS_AS(essence_numeric(CatalogExpr::monomial(1), 0.5), BoundsError);
}

TEST_CASE("essence is linear") {
    testutil::Rng rng(40);
    for (int j = 0; j < 100; ++j) {
        const CatalogExpr f = testutil::random_expr(rng);
        const CatalogExpr g = testutil::random_expr(rng);
        const Complex lam = rng.box(-2.0, 2.0, -2.0, 2.0);
        const Complex mu = rng.box(-2.0, 2.0, -2.0, 2.0);
        const Complex lhs = essence(lam * f + mu * g).value;
        const Complex rhs = lam * essence(f).value + mu * essence(g).value;
        CHECK(testutil::rel_err(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("Bernoulli sweep: ess(x^a) = B_a for a = 0..12") {
    for (int a = 0; a <= 12; ++a) {
        const CatalogExpr f = a == 0 ? CatalogExpr::constant(1.0) : CatalogExpr::monomial(a);
        CHECK(std::abs(essence(f).value -
                       Complex(bernoulli_d(a, BernoulliConvention::plus), 0.0)) <= 1e-12);
    }
}

TEST_CASE("power row: ess(x^a) = -a zeta(1-a) for integer a in [-6,6], a != 0") {
    for (int a = -6; a <= 6; ++a) {
        if (a == 0) continue;
        const CatalogExpr f = a > 0 ? CatalogExpr::monomial(a) : CatalogExpr::inverse_monomial(-a);
        CHECK(std::abs(essence(f).value + static_cast<double>(a) * zeta_int(1 - a)) <= 1e-12);
    }
}

TEST_CASE("derivative identity residuals") {
    testutil::Rng rng(41);
    const CatalogExpr sq = CatalogExpr::monomial(2);
    for (int j = 0; j < 20; ++j) {
        const Complex x = rng.box(-2.5, 2.5, -2.5, 2.5);
        CHECK(essence_derivative_identity_check(sq, x) <= 1e-6);
    }
    CHECK(essence_derivative_identity_check(CatalogExpr::inverse_monomial(1), Complex(1.0, 1.0)) <=
          1e-6);
    // constants: exact identity up to finite-difference roundoff (~|cx| eps / h)
    CHECK(essence_derivative_identity_check(CatalogExpr::constant(5.0), Complex(0.05, 0.02)) <=
          1e-10);
    CHECK(essence_derivative_identity_check(CatalogExpr::constant(5.0), Complex(0.8, -1.2)) <=
          5e-9);
}

TEST_CASE("degenerate exponential parameters are rejected") {
    CHECK_THROWS_AS(essence(CatalogExpr::exponential(2.0 * pi * I)), NonSummableError);
    CHECK_THROWS_AS(essence(CatalogExpr::exponential(4.0 * pi * I)), NonSummableError);
}

TEST_CASE("table1 and derivative property suites stay green") {
    CHECK(run_verify_suite("table1", 999, 100).pass());
    CHECK(run_verify_suite("derivative", 999, 100).pass());
}

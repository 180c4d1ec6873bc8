#include "doctest.h"

#include "fracsum/bernoulli.hpp"

using namespace fracsum;

TEST_CASE("low-order Bernoulli numbers, both conventions") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1, BernoulliConvention::plus) == Rational(1, 2));
    CHECK(bernoulli(1, BernoulliConvention::minus) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("odd Bernoulli numbers vanish from 3 on") {
    for (int n = 3; n <= 63; n += 2) {
        CHECK(bernoulli(n, BernoulliConvention::plus) == 0);
        CHECK(bernoulli(n, BernoulliConvention::minus) == 0);
    }
}

TEST_CASE("conventions agree away from n = 1") {
    for (int n = 0; n <= 64; ++n) {
        if (n == 1) continue;
        CHECK(bernoulli(n, BernoulliConvention::plus) == bernoulli(n, BernoulliConvention::minus));
    }
}

TEST_CASE("defining recurrence holds exactly in rational arithmetic") {
    const auto& table = shared_bernoulli_table(BernoulliConvention::minus);
    REQUIRE(table.bound() >= 30);
    for (int n = 1; n <= table.bound(); ++n) {
        Rational acc = 0;
        for (int k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * table.value(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("index outside the table bound is a bounds error") {
    CHECK_THROWS_AS(bernoulli(65), BoundsError);
    CHECK_THROWS_AS(shared_bernoulli_table(BernoulliConvention::plus).value(-1), BoundsError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(65, 32) == Integer("3609714217008132870"));
    CHECK(binomial(5, 7) == 0);
}

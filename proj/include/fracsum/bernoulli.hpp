#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "fracsum/types.hpp"

namespace fracsum {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Two sign conventions for the Bernoulli numbers. They differ only at n = 1:
// B_1 = +1/2 under `plus`, -1/2 under `minus`.
enum class BernoulliConvention { plus, minus };

// Exact rational Bernoulli numbers B_0..B_N, generated once from the
// recurrence sum_{k=0}^{n} C(n+1,k) B_k^- = 0 (n >= 1).
class BernoulliTable {
public:
    explicit BernoulliTable(int n_max, BernoulliConvention conv = BernoulliConvention::plus);

    int bound() const noexcept { return static_cast<int>(values_.size()) - 1; }
    BernoulliConvention convention() const noexcept { return convention_; }

    const Rational& value(int n) const;

private:
    std::vector<Rational> values_;
    BernoulliConvention convention_;
};

// Shared immutable table (N = 64), built on first use; safe for concurrent readers.
const BernoulliTable& shared_bernoulli_table(BernoulliConvention conv);

Rational bernoulli(int n, BernoulliConvention conv = BernoulliConvention::plus);
double bernoulli_d(int n, BernoulliConvention conv = BernoulliConvention::plus);

Integer binomial(int n, int k);

}  // namespace fracsum

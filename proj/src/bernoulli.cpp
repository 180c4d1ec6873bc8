#include "fracsum/bernoulli.hpp"

namespace fracsum {

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

BernoulliTable::BernoulliTable(int n_max, BernoulliConvention conv) : convention_(conv) {
    if (n_max < 0) throw BoundsError("Bernoulli table bound must be nonnegative");
    values_.resize(static_cast<std::size_t>(n_max) + 1);
    values_[0] = 1;
    // B_n^- = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k^-
    for (int n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * values_[k];
        values_[n] = -acc / (n + 1);
    }
    if (conv == BernoulliConvention::plus && n_max >= 1) values_[1] = Rational(1, 2);
}

const Rational& BernoulliTable::value(int n) const {
    if (n < 0 || n > bound())
        throw BoundsError("Bernoulli index " + std::to_string(n) + " outside table bound " +
                          std::to_string(bound()));
    return values_[static_cast<std::size_t>(n)];
}

namespace {
constexpr int kSharedBound = 64;
}

const BernoulliTable& shared_bernoulli_table(BernoulliConvention conv) {
    static const BernoulliTable plus_table(kSharedBound, BernoulliConvention::plus);
    static const BernoulliTable minus_table(kSharedBound, BernoulliConvention::minus);
    return conv == BernoulliConvention::plus ? plus_table : minus_table;
}

Rational bernoulli(int n, BernoulliConvention conv) {
    return shared_bernoulli_table(conv).value(n);
}

double bernoulli_d(int n, BernoulliConvention conv) {
    return bernoulli(n, conv).convert_to<double>();
}

}  // namespace fracsum

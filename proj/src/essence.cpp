#include "fracsum/essence.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fracsum/bernoulli.hpp"
#include "fracsum/specfun.hpp"
#include "fracsum/sum.hpp"

namespace fracsum {

namespace {

constexpr double kDegenerateTol = 1e-12;

Complex basis_essence(const BasisFunction& b) {
    switch (b.kind) {
        case BasisKind::constant:
            return 1.0;
        case BasisKind::monomial:
            return bernoulli_d(b.power, BernoulliConvention::plus);
        case BasisKind::inverse_monomial:
            return static_cast<double>(b.power) * zeta_int(b.power + 1);
        case BasisKind::exponential: {
            const Complex u = std::exp(b.rate);
            if (std::abs(u - 1.0) < kDegenerateTol)
                throw NonSummableError("degenerate exponential parameter in essence");
            return b.rate * u / (u - 1.0);
        }
        case BasisKind::exp_times_x: {
            const Complex u = std::exp(b.rate);
            if (std::abs(u - 1.0) < kDegenerateTol)
                throw NonSummableError("degenerate exponential parameter in essence");
            return u / (u - 1.0) * (1.0 - b.rate / (u - 1.0));
        }
        case BasisKind::logarithm:
            return Complex(-euler_gamma, 0.0);
    }
    return 0.0;
}

}  // namespace

EssenceResult essence(const CatalogExpr& e) {
    const auto rep = check_summable(e);
    if (!rep.summable) throw NonSummableError(rep.reason);
    Complex v = 0.0;
    for (const auto& t : e.terms()) {
        v += t.coeff * basis_essence(t.basis);
        if (t.shift != 0.0) {
            // shifted term: ess picks up the fractional sum of the derivative to the shift
            const CatalogExpr base({{1.0, 0.0, t.basis}});
            v += t.coeff * frac_sum(differentiate(base), 1.0, t.shift).value;
        }
    }
    return {v, EssenceProvenance::closed_form, 0.0};
}

EssenceResult essence_numeric(const CatalogExpr& e, double h_min) {
    if (h_min <= 0.0 || h_min >= 0.125) throw BoundsError("h_min must lie in (0, 1/8)");
    int top = static_cast<int>(std::ceil(std::log2(1.0 / h_min)));
    top = std::min(std::max(top, 5), 45);

    // Richardson table over A(h) = frac_sum(e,1,h)/h = ess + c1 h + c2 h^2 + ...
    std::vector<std::vector<Complex>> table;
    for (int j = 3; j <= top; ++j) {
        const double h = std::ldexp(1.0, -j);
        const Complex a = frac_sum(e, 1.0, Complex(h, 0.0)).value / h;
        std::vector<Complex> row{a};
        const int depth = std::min<int>(4, static_cast<int>(table.size()));
        for (int m = 1; m <= depth; ++m) {
            const double w = std::ldexp(1.0, m);  // 2^m
            row.push_back(row[m - 1] + (row[m - 1] - table.back()[m - 1]) / (w - 1.0));
        }
        table.push_back(std::move(row));
    }

    // Deepest column, entry with the smallest last delta (guards the
    // cancellation noise that dominates A(h) for very small h).
    const std::size_t d = table.back().size() - 1;
    Complex best = table.back()[d];
    double best_delta = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < table.size(); ++j) {
        if (table[j].size() <= d || table[j - 1].size() <= d) continue;
        const double delta = std::abs(table[j][d] - table[j - 1][d]);
        if (delta < best_delta) {
            best_delta = delta;
            best = table[j][d];
        }
    }
    const double err = std::max(best_delta, 1e-15 * (1.0 + std::abs(best)));
    return {best, EssenceProvenance::numeric_limit, err};
}

double essence_derivative_identity_check(const CatalogExpr& e, Complex x) {
    const double step = 1e-6;
    const Complex d =
        (frac_sum(e, 1.0, x + step).value - frac_sum(e, 1.0, x - step).value) / (2.0 * step);
    const Complex rhs = essence(e).value + frac_sum(differentiate(e), 1.0, x).value;
    return std::abs(d - rhs);
}

}  // namespace fracsum

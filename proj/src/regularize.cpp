#include "fracsum/regularize.hpp"

#include <cmath>

#include "fracsum/essence.hpp"

namespace fracsum {

bool classical_series_converges(const CatalogExpr& e) {
    for (const auto& t : e.terms()) {
        switch (t.basis.kind) {
            case BasisKind::constant:
            case BasisKind::monomial:
            case BasisKind::logarithm:
                return false;
            case BasisKind::inverse_monomial:
                if (t.basis.power == 1) return false;  // harmonic tail
                break;
            case BasisKind::exponential:
            case BasisKind::exp_times_x:
                if (std::abs(std::exp(t.basis.rate)) >= 1.0 - 1e-12) return false;
                break;
        }
    }
    return true;
}

HashSumResult hash_sum(const CatalogExpr& e) {
    const CatalogExpr primitive = antiderivative(e);
    return {-essence(primitive).value, classical_series_converges(e)};
}

}  // namespace fracsum

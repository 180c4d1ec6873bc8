#pragma once

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

struct HashSumResult {
    Complex value{};
    // Decay heuristic for the classical series sum f(k); the assigned value
    // is computed unconditionally either way.
    bool classical_convergent = false;
};

// Divergent-series value by the primitive's essence: -ess(F) with F' = f and
// F the catalog antiderivative (integration constant 0). Throws
// NoPrimitiveError when no catalog primitive exists (e.g. f = ln).
HashSumResult hash_sum(const CatalogExpr& e);

bool classical_series_converges(const CatalogExpr& e);

}  // namespace fracsum

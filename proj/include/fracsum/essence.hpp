#pragma once

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

enum class EssenceProvenance { closed_form, numeric_limit };

struct EssenceResult {
    Complex value{};
    EssenceProvenance provenance = EssenceProvenance::closed_form;
    double err_estimate = 0.0;  // 0 for closed forms
};

// Essence: the slope at 0 of x -> sum_{k=1..x} f(k), equivalently
// lim_{h->0} (1/h) sum_{k=1..h} f(k). Per basis:
//   constant c      -> c                  x^a        -> B_a  (B_1 = +1/2)
//   x^{-a}          -> a zeta(a+1)        ln x       -> -gamma
//   e^{zx}          -> z e^z/(e^z - 1)    e^{zx} x   -> e^z/(e^z-1) (1 - z/(e^z-1))
// A term shifted by s picks up sum_{k=1..s} f'(k) on top of the base essence.
EssenceResult essence(const CatalogExpr& e);

// Independent numeric route: (1/h) sum_{1..h} f on the dyadic schedule
// h = 2^{-j}, j = 3..ceil(log2(1/h_min)), Richardson-extrapolated (depth 4).
EssenceResult essence_numeric(const CatalogExpr& e, double h_min = 1e-3);

// Residual | d/dx sum_{1..x} f  -  ess(f)  -  sum_{1..x} f' | with the
// derivative taken by central difference (step 1e-6).
double essence_derivative_identity_check(const CatalogExpr& e, Complex x);

}  // namespace fracsum

#pragma once

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

// Euler-Maclaurin evaluation of sum_{k=1..x} P(k) for polynomial P:
//   int_0^x P + (P(x) - P(0))/2 + sum_m B_2m/(2m)! (P^{(2m-1)}(x) - P^{(2m-1)}(0)),
// the correction series truncating naturally at 2m-1 <= deg P. Agrees with
// frac_sum for every complex x.
Complex euler_maclaurin_sum(const CatalogExpr& p, Complex x);

}  // namespace fracsum

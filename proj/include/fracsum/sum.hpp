#pragma once

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

enum class SumMethod { closed_form, series, taylor };

struct SumResult {
    Complex value{};
    SumMethod method = SumMethod::closed_form;
    double err_estimate = 0.0;   // claimed truncation bound; 0 for closed forms
    long long terms_used = 0;    // series / taylor only
    bool converged = true;       // false when the series hit max_terms first
};

// Fractional finite sum over k = x..y, reduced to sums from 1 via continued
// summation and evaluated by per-family closed forms:
//   monomials        Faulhaber polynomial (B_1 = -1/2 convention)
//   constants        c * t
//   e^{zk}           geometric form u(u^t - 1)/(u - 1), u = e^z
//   e^{zk} k         u/(u-1) (t e^{zt} - (e^{zt} - 1)/(u - 1))
//   k^{-a}           C_a + (-1)^{a+1}/(a-1)! psi^{(a-1)}(t+1), C_1 = gamma,
//                    C_a = zeta(a) for a > 1
//   ln k             ln_gamma(t+1)
// Shifts ride along via translation invariance.
SumResult frac_sum(const CatalogExpr& e, Complex x, Complex y);

// Fundamental-formula engine, independent of the closed forms above:
// sum_{v=1..N} (f(v) - f(v+x)) with an Euler-Maclaurin tail correction for
// inverse-power terms and geometric tail bounds for decaying exponentials.
// Requires every term to decay at +infinity.
SumResult frac_sum_series(const CatalogExpr& e, Complex x, double tol = 1e-8,
                          long long max_terms = 10'000'000);

// Taylor engine: sum of ess(f^{(k-1)}) x^k / k!, for polynomial and
// exponential-family content (exact for polynomials once n_terms > degree).
SumResult frac_sum_taylor(const CatalogExpr& e, Complex x, int n_terms);

const char* method_name(SumMethod m);

}  // namespace fracsum

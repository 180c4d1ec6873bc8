#include "fracsum/euler_maclaurin.hpp"

#include "fracsum/bernoulli.hpp"

namespace fracsum {

Complex euler_maclaurin_sum(const CatalogExpr& p, Complex x) {
    if (!p.is_polynomial())
        throw UnsupportedError("the Euler-Maclaurin engine requires polynomial content");
    const int deg = p.degree();
    if (deg > 16) throw UnsupportedError("polynomial degree cap (16) exceeded");

    const Complex integral = evaluate(antiderivative(p), x);  // primitive vanishes at 0
    const Complex mid = 0.5 * (evaluate(p, x) - evaluate(p, 0.0));

    Complex corr = 0.0;
    CatalogExpr d = differentiate(p);  // P^{(2m-1)} as m advances
    double fact = 1.0;                 // (2m)!
    for (int m = 1; 2 * m - 1 <= deg; ++m) {
        fact *= (2.0 * m - 1.0) * (2.0 * m);
        corr += bernoulli_d(2 * m, BernoulliConvention::minus) / fact *
                (evaluate(d, x) - evaluate(d, 0.0));
        d = differentiate(differentiate(d));
    }
    return integral + mid + corr;
}

}  // namespace fracsum

#pragma once

#include <string>
#include <vector>

#include "fracsum/types.hpp"

namespace fracsum {

// One basis family of the function catalog. The catalog is closed under
// translation and finite linear combination; every supported input
// normalizes to a sum of coeff * basis(x + shift) terms.
enum class BasisKind {
    constant,           // 1
    monomial,           // x^a, a >= 1
    inverse_monomial,   // x^(-a), a >= 1, extended by zero at x = 0
    exponential,        // e^{zx}
    exp_times_x,        // e^{zx} x
    logarithm,          // ln x (principal branch), extended by zero at x = 0
};

struct BasisFunction {
    BasisKind kind = BasisKind::constant;
    int power = 0;       // monomial / inverse_monomial exponent a
    Complex rate{};      // exponential / exp_times_x parameter z

    static BasisFunction constant() { return {BasisKind::constant, 0, {}}; }
    static BasisFunction monomial(int a);
    static BasisFunction inverse_monomial(int a);
    static BasisFunction exponential(Complex z) { return {BasisKind::exponential, 0, z}; }
    static BasisFunction exp_times_x(Complex z) { return {BasisKind::exp_times_x, 0, z}; }
    static BasisFunction logarithm() { return {BasisKind::logarithm, 0, {}}; }
};

// coeff * basis(x + shift)
struct CatalogTerm {
    Complex coeff{};
    Complex shift{};
    BasisFunction basis{};
};

// Finite linear combination of catalog terms, kept in canonical form:
//   - Monomial(0) -> Constant; Exponential(0) -> Constant; ExpTimesX(0) -> Monomial(1)
//   - monomial shifts are expanded binomially; exponential shifts fold into
//     the coefficient (so only inverse_monomial/logarithm carry shifts)
//   - terms with identical (kind, power, rate, shift) merge; zero coeffs drop
class CatalogExpr {
public:
    CatalogExpr() = default;
    explicit CatalogExpr(std::vector<CatalogTerm> terms);

    static CatalogExpr zero() { return CatalogExpr(); }
    static CatalogExpr constant(Complex c);
    static CatalogExpr monomial(int a, Complex coeff = 1.0);
    static CatalogExpr inverse_monomial(int a, Complex shift = 0.0, Complex coeff = 1.0);
    static CatalogExpr exponential(Complex z, Complex coeff = 1.0);
    static CatalogExpr exp_times_x(Complex z, Complex coeff = 1.0);
    static CatalogExpr logarithm(Complex shift = 0.0, Complex coeff = 1.0);

    const std::vector<CatalogTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Only constant/monomial terms present.
    bool is_polynomial() const noexcept;
    // Polynomial degree; 0 for constants, -1 for the zero function.
    int degree() const noexcept;
    // Single Constant term (or zero function)?
    bool is_constant() const noexcept;
    Complex constant_value() const;  // requires is_constant()

    CatalogExpr& operator+=(const CatalogExpr& rhs);
    CatalogExpr& operator-=(const CatalogExpr& rhs);
    CatalogExpr& operator*=(Complex s);
    friend CatalogExpr operator+(CatalogExpr a, const CatalogExpr& b) { return a += b; }
    friend CatalogExpr operator-(CatalogExpr a, const CatalogExpr& b) { return a -= b; }
    friend CatalogExpr operator*(CatalogExpr a, Complex s) { return a *= s; }
    friend CatalogExpr operator*(Complex s, CatalogExpr a) { return a *= s; }
    CatalogExpr operator-() const;

private:
    std::vector<CatalogTerm> terms_;
};

// Pointwise value. Terms singular at x + shift (inverse powers and ln at
// exactly 0) contribute 0: the catalog's extension-by-zero convention.
Complex evaluate(const CatalogExpr& e, Complex x);

// Exact derivative; the catalog is closed under d/dx.
CatalogExpr differentiate(const CatalogExpr& e);

// Term-wise primitive with integration constant 0. Throws NoPrimitiveError
// for logarithm terms (x ln x - x lies outside the catalog).
CatalogExpr antiderivative(const CatalogExpr& e);

// x -> e(x + s).
CatalogExpr translate(const CatalogExpr& e, Complex s);

struct SummabilityReport {
    bool summable = true;
    std::vector<CatalogTerm> offending;
    std::string reason;
};

// Rejects exponential-family terms with e^{z/2} = -1 (z an odd multiple of
// 2*pi*i): such functions obey f(x + 1/2) = -f(x) with f(1/2) != 0, which is
// inconsistent with continued summation + translation + linearity + consistency.
SummabilityReport check_summable(const CatalogExpr& e);

// Distance from bound t to the closed-form pole lattice {-m - shift : m >= 1}
// of the inverse-power / logarithm terms; +inf when no such term exists.
double bound_pole_distance(const CatalogExpr& e, Complex t);

// Term-by-term comparison in canonical form with tolerance on coefficients
// and parameters (test/verify helper).
bool approx_equal(const CatalogExpr& a, const CatalogExpr& b, double tol);

std::string describe(const BasisFunction& b);

}  // namespace fracsum

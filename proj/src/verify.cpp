#include "fracsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "fracsum/bernoulli.hpp"
#include "fracsum/essence.hpp"
#include "fracsum/euler_maclaurin.hpp"
#include "fracsum/specfun.hpp"
#include "fracsum/sum.hpp"

namespace fracsum {

namespace {

constexpr double kPi = std::numbers::pi;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(eng_);
    }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
    Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        return {re, uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 eng_;
};

struct Families {
    bool poly = true;
    bool expo = true;
    bool etx = true;
    bool inv = true;
    bool log = true;
    bool decaying_only = false;
};

Complex random_coeff(Rng& rng) {
    Complex c;
    do {
        c = rng.box(-2.0, 2.0, -2.0, 2.0);
    } while (std::abs(c) < 0.05);
    return c;
}

Complex random_safe_shift(Rng& rng) { return rng.box(-0.4, 2.5, -1.5, 1.5); }

Complex random_rate(Rng& rng, bool decaying) {
    for (;;) {
        const Complex z = rng.box(-1.2, decaying ? -0.1 : 0.4, -2.0, 2.0);
        const Complex u = std::exp(z);
        if (std::abs(u - 1.0) < 0.3) continue;
        if (std::abs(std::exp(z / 2.0) + 1.0) < 0.3) continue;
        return z;
    }
}

CatalogExpr random_expr(Rng& rng, const Families& fam) {
    std::vector<int> kinds;
    if (fam.poly && !fam.decaying_only) kinds.push_back(0);
    if (fam.expo) kinds.push_back(1);
    if (fam.etx) kinds.push_back(2);
    if (fam.inv) kinds.push_back(3);
    if (fam.log && !fam.decaying_only) kinds.push_back(4);

    std::vector<CatalogTerm> terms;
    const int n = rng.integer(1, 3);
    for (int j = 0; j < n; ++j) {
        const int kind = kinds[static_cast<std::size_t>(rng.integer(0, static_cast<int>(kinds.size()) - 1))];
        const Complex c = random_coeff(rng);
        switch (kind) {
            case 0:
                terms.push_back({c, 0.0, BasisFunction::monomial(rng.integer(1, 5))});
                if (rng.integer(0, 1)) terms.push_back({random_coeff(rng), 0.0, BasisFunction::constant()});
                break;
            case 1:
                terms.push_back({c, 0.0, BasisFunction::exponential(random_rate(rng, fam.decaying_only))});
                break;
            case 2:
                terms.push_back({c, 0.0, BasisFunction::exp_times_x(random_rate(rng, fam.decaying_only))});
                break;
            case 3:
                terms.push_back({c, random_safe_shift(rng), BasisFunction::inverse_monomial(rng.integer(1, 3))});
                break;
            case 4:
                terms.push_back({c, random_safe_shift(rng), BasisFunction::logarithm()});
                break;
        }
    }
    return CatalogExpr(std::move(terms));
}

CatalogExpr random_polynomial(Rng& rng, int max_deg) {
    std::vector<CatalogTerm> terms;
    const int deg = rng.integer(1, max_deg);
    terms.push_back({random_coeff(rng), 0.0, BasisFunction::constant()});
    for (int a = 1; a <= deg; ++a)
        terms.push_back({rng.box(-2.0, 2.0, -2.0, 2.0), 0.0, BasisFunction::monomial(a)});
    return CatalogExpr(std::move(terms));
}

// A bound t such that every probe t + off keeps its distance from the
// closed-form pole lattice of e.
Complex clear_bound(Rng& rng, const CatalogExpr& e, const std::vector<Complex>& offsets,
                    double clearance = 0.2, double half_width = 3.0) {
    for (int tries = 0; tries < 500; ++tries) {
        const Complex t = rng.box(-half_width, half_width, -half_width, half_width);
        bool ok = true;
        for (const Complex& off : offsets)
            if (bound_pole_distance(e, t + off) < clearance) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    throw BoundsError("could not sample a pole-free bound");
}

double rel_residual(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

PropertyResult property(const std::string& name, int cases, double tol,
                        const std::function<double(Rng&)>& one, Rng& rng) {
    double worst = 0.0;
    for (int j = 0; j < cases; ++j) worst = std::max(worst, one(rng));
    return {name, cases, worst, tol, worst <= tol};
}

// --------------------------------------------------------------------------
// axioms
// --------------------------------------------------------------------------

SuiteReport suite_axioms(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "axioms";

    rep.properties.push_back(property(
        "A4 consistency: sum x..x = f(x)", count, 1e-10,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const Complex x = clear_bound(r, f, {0.0, -1.0});
            return rel_residual(frac_sum(f, x, x).value, evaluate(f, x));
        },
        rng));

    rep.properties.push_back(property(
        "A1 continued summation", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const Complex x = clear_bound(r, f, {-1.0});
            const Complex y = clear_bound(r, f, {0.0});
            const Complex z = clear_bound(r, f, {0.0});
            const Complex lhs = frac_sum(f, x, y).value + frac_sum(f, y + 1.0, z).value;
            return rel_residual(lhs, frac_sum(f, x, z).value);
        },
        rng));

    rep.properties.push_back(property(
        "A2 translation invariance", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const Complex s = r.box(-1.5, 1.5, -1.5, 1.5);
            const CatalogExpr g = translate(f, s);
            const Complex x = clear_bound(r, g, {-1.0});
            const Complex y = clear_bound(r, g, {0.0});
            return rel_residual(frac_sum(f, x + s, y + s).value, frac_sum(g, x, y).value);
        },
        rng));

    rep.properties.push_back(property(
        "A3 linearity", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const CatalogExpr g = random_expr(r, {});
            const Complex lam = r.box(-2.0, 2.0, -2.0, 2.0);
            const Complex mu = r.box(-2.0, 2.0, -2.0, 2.0);
            const CatalogExpr h = lam * f + mu * g;
            const Complex x = clear_bound(r, h, {-1.0});
            const Complex y = clear_bound(r, h, {0.0});
            const Complex lhs = frac_sum(h, x, y).value;
            const Complex rhs = lam * frac_sum(f, x, y).value + mu * frac_sum(g, x, y).value;
            return rel_residual(lhs, rhs);
        },
        rng));

    rep.properties.push_back(property(
        "generalized empty sum: sum x..x-1 = 0", count, 1e-10,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const Complex x = clear_bound(r, f, {-1.0});
            return std::abs(frac_sum(f, x, x - 1.0).value);
        },
        rng));

    rep.properties.push_back(property(
        "interpolation of classical sums (n = 1..200)", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const int n = r.integer(1, 200);
            return rel_residual(frac_sum(f, 1.0, static_cast<double>(n)).value,
                                classical_loop_sum(f, n));
        },
        rng));

    rep.properties.push_back(property(
        "opposite sum: sum 1..-x = -sum of translate", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            Complex x;
            for (;;) {
                x = r.box(-3.0, 3.0, -3.0, 3.0);
                if (bound_pole_distance(f, -x) >= 0.2 && bound_pole_distance(f, 0.0) >= 0.2)
                    break;
            }
            const Complex lhs = frac_sum(f, 1.0, -x).value;
            const Complex rhs = -frac_sum(translate(f, -x), 1.0, x).value;
            return rel_residual(lhs, rhs);
        },
        rng));

    rep.properties.push_back(property(
        "half-period sum of cos(2 pi k / x) k equals x/2", std::max(count / 6, 50), 1e-8,
        [](Rng& r) {
            Complex x;
            Complex z;
            for (;;) {
                x = r.box(0.5, 3.0, -1.5, 1.5);
                z = 2.0 * kPi * Complex(0.0, 1.0) / x;
                const Complex u = std::exp(z);
                if (std::abs(u - 1.0) > 0.2 && std::abs(std::exp(z / 2.0) + 1.0) > 0.2) break;
            }
            const CatalogExpr f =
                CatalogExpr::exp_times_x(z, 0.5) + CatalogExpr::exp_times_x(-z, 0.5);
            return rel_residual(frac_sum(f, 1.0, x).value, x / 2.0);
        },
        rng));

    rep.properties.push_back(property(
        "alternating-weight identities: sum cos(pi k) k and sum sin(pi k) k", count, 1e-9,
        [](Rng& r) {
            const Complex x = r.box(-3.0, 3.0, -3.0, 3.0);
            const Complex I(0.0, 1.0);
            const CatalogExpr fcos = CatalogExpr::exp_times_x(Complex(0.0, kPi), 0.5) +
                                     CatalogExpr::exp_times_x(Complex(0.0, -kPi), 0.5);
            const CatalogExpr fsin = CatalogExpr::exp_times_x(Complex(0.0, kPi), -0.5 * I) +
                                     CatalogExpr::exp_times_x(Complex(0.0, -kPi), 0.5 * I);
            const Complex cpx = std::cos(kPi * x);
            const Complex spx = std::sin(kPi * x);
            const double r1 = rel_residual(frac_sum(fcos, 1.0, x).value,
                                           0.5 * cpx * x + 0.25 * cpx - 0.25);
            const double r2 =
                rel_residual(frac_sum(fsin, 1.0, x).value, 0.5 * spx * x + 0.25 * spx);
            return std::max(r1, r2);
        },
        rng));

    return rep;
}

// --------------------------------------------------------------------------
// table1
// --------------------------------------------------------------------------

SuiteReport suite_table1(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "table1";
    constexpr double apery = 1.2020569031595942854;  // zeta(3)

    struct Row {
        const char* name;
        CatalogExpr expr;
        Complex reference;
    };
    const Complex z_c(2.5, -1.0);
    std::vector<Row> rows;
    rows.push_back({"constant", CatalogExpr::constant(z_c), z_c});
    rows.push_back({"x^2", CatalogExpr::monomial(2), Complex(1.0 / 6.0, 0.0)});
    rows.push_back({"x^(-2)", CatalogExpr::inverse_monomial(2), Complex(2.0 * apery, 0.0)});
    rows.push_back({"e^(pi i x)", CatalogExpr::exponential(Complex(0.0, kPi)),
                    Complex(0.0, kPi / 2.0)});
    rows.push_back({"e^(pi i x) x", CatalogExpr::exp_times_x(Complex(0.0, kPi)),
                    Complex(0.5, kPi / 4.0)});
    rows.push_back({"ln x", CatalogExpr::logarithm(), Complex(-euler_gamma, 0.0)});
    rows.push_back({"1/(x(x+1))",
                    CatalogExpr::inverse_monomial(1, 0.0) - CatalogExpr::inverse_monomial(1, 1.0),
                    Complex(1.0, 0.0)});

    {
        double worst = 0.0;
        for (const auto& row : rows) worst = std::max(worst, std::abs(essence(row.expr).value - row.reference));
        rep.properties.push_back({"closed-form essences vs references",
                                  static_cast<int>(rows.size()), worst, 1e-10, worst <= 1e-10});
    }
    {
        double worst = 0.0;
        for (const auto& row : rows) {
            const EssenceResult n = essence_numeric(row.expr);
            const double tol_row = std::max(1e-6, n.err_estimate);
            worst = std::max(worst, std::abs(n.value - essence(row.expr).value) / tol_row);
        }
        rep.properties.push_back({"numeric-limit essences vs closed form (scaled by tol)",
                                  static_cast<int>(rows.size()), worst, 1.0, worst <= 1.0});
    }
    {
        // ess(x^a) = B_a for a = 0..12, against the exact rationals
        double worst = 0.0;
        for (int a = 0; a <= 12; ++a) {
            const CatalogExpr f = a == 0 ? CatalogExpr::constant(1.0) : CatalogExpr::monomial(a);
            worst = std::max(worst, std::abs(essence(f).value -
                                             bernoulli_d(a, BernoulliConvention::plus)));
        }
        rep.properties.push_back({"Bernoulli sweep ess(x^a) = B_a, a = 0..12", 13, worst, 1e-12,
                                  worst <= 1e-12});
    }
    {
        // x^a row for integer a in [-6,6]\{0}: ess = -a zeta(1-a)
        double worst = 0.0;
        for (int a = -6; a <= 6; ++a) {
            if (a == 0) continue;
            const CatalogExpr f =
                a > 0 ? CatalogExpr::monomial(a) : CatalogExpr::inverse_monomial(-a);
            const Complex ref = -static_cast<double>(a) * zeta_int(1 - a);
            worst = std::max(worst, std::abs(essence(f).value - ref));
        }
        rep.properties.push_back({"power row ess(x^a) = -a zeta(1-a), a in [-6,6]*", 12, worst,
                                  1e-12, worst <= 1e-12});
    }

    rep.properties.push_back(property(
        "essence linearity", count, 1e-10,
        [](Rng& r) {
            const CatalogExpr f = random_expr(r, {});
            const CatalogExpr g = random_expr(r, {});
            const Complex lam = r.box(-2.0, 2.0, -2.0, 2.0);
            const Complex mu = r.box(-2.0, 2.0, -2.0, 2.0);
            const Complex lhs = essence(lam * f + mu * g).value;
            return rel_residual(lhs, lam * essence(f).value + mu * essence(g).value);
        },
        rng));

    rep.properties.push_back(property(
        "shift rule: d/dy ess(f(.+y)) at 0 = ess(f')", count, 1e-6,
        [](Rng& r) {
            Families fam;
            fam.inv = fam.log = false;  // polynomial and exponential families
            const CatalogExpr f = random_expr(r, fam);
            const double h = 1e-5;
            const Complex lhs =
                (essence(translate(f, h)).value - essence(translate(f, -h)).value) / (2.0 * h);
            return rel_residual(lhs, essence(differentiate(f)).value);
        },
        rng));

    return rep;
}

// --------------------------------------------------------------------------
// euler-maclaurin
// --------------------------------------------------------------------------

SuiteReport suite_euler_maclaurin(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "euler-maclaurin";

    rep.properties.push_back(property(
        "Euler-Maclaurin equals the fractional sum (degree <= 10)", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr p = random_polynomial(r, 10);
            const Complex x = r.box(-3.0, 3.0, -3.0, 3.0);
            return rel_residual(euler_maclaurin_sum(p, x), frac_sum(p, 1.0, x).value);
        },
        rng));

    rep.properties.push_back(property(
        "Euler-Maclaurin at integer bounds equals the classical loop", count, 1e-9,
        [](Rng& r) {
            const CatalogExpr p = random_polynomial(r, 10);
            const int n = r.integer(1, 50);
            return rel_residual(euler_maclaurin_sum(p, static_cast<double>(n)),
                                classical_loop_sum(p, n));
        },
        rng));

    return rep;
}

// --------------------------------------------------------------------------
// derivative identity
// --------------------------------------------------------------------------

// The identity residual is measured through an h = 1e-6 central difference,
// so it carries a |sum| * eps / h roundoff floor and a |f'''| h^2 / 6
// truncation term. The generators keep sum magnitudes O(100) and stay 0.45
// clear of the pole lattice, which puts both floors two orders below the
// 1e-6 gate.
SuiteReport suite_derivative(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "derivative";

    const auto gentle_rate = [](Rng& r) {
        for (;;) {
            const Complex z = r.box(-1.2, 0.4, -1.2, 1.2);
            if (std::abs(std::exp(z) - 1.0) < 0.3) continue;
            if (std::abs(std::exp(z / 2.0) + 1.0) < 0.3) continue;
            return z;
        }
    };

    const auto family_property = [&rng, count, &rep](const char* name, auto make_case) {
        rep.properties.push_back(property(
            name, count, 1e-6,
            [make_case](Rng& r) {
                const auto [f, x] = make_case(r);
                return essence_derivative_identity_check(f, x);
            },
            rng));
    };

    family_property("d/dx sum f = ess(f) + sum f'  (polynomials)", [](Rng& r) {
        std::vector<CatalogTerm> terms{{r.box(-1.5, 1.5, -1.5, 1.5), 0.0, BasisFunction::constant()}};
        const int deg = r.integer(1, 4);
        for (int a = 1; a <= deg; ++a)
            terms.push_back({r.box(-1.5, 1.5, -1.5, 1.5), 0.0, BasisFunction::monomial(a)});
        return std::make_pair(CatalogExpr(std::move(terms)), r.box(-1.5, 1.5, -1.5, 1.5));
    });

    family_property("d/dx sum f = ess(f) + sum f'  (exponentials)", [gentle_rate](Rng& r) {
        CatalogExpr f = CatalogExpr::exponential(gentle_rate(r), r.box(-1.5, 1.5, -1.5, 1.5));
        if (r.integer(0, 1))
            f += CatalogExpr::exponential(gentle_rate(r), r.box(-1.5, 1.5, -1.5, 1.5));
        return std::make_pair(f, r.box(-1.5, 1.5, -1.5, 1.5));
    });

    family_property("d/dx sum f = ess(f) + sum f'  (x-weighted exponentials)",
                    [gentle_rate](Rng& r) {
                        const CatalogExpr f =
                            CatalogExpr::exp_times_x(gentle_rate(r), r.box(-1.5, 1.5, -1.5, 1.5));
                        return std::make_pair(f, r.box(-1.5, 1.5, -1.5, 1.5));
                    });

    family_property("d/dx sum f = ess(f) + sum f'  (inverse powers)", [](Rng& r) {
        CatalogExpr f =
            CatalogExpr::inverse_monomial(r.integer(1, 3), random_safe_shift(r), random_coeff(r));
        if (r.integer(0, 1))
            f += CatalogExpr::inverse_monomial(r.integer(1, 3), random_safe_shift(r),
                                               random_coeff(r));
        return std::make_pair(f, clear_bound(r, f, {0.0}, 0.45, 2.0));
    });

    return rep;
}

// --------------------------------------------------------------------------
// oracles
// --------------------------------------------------------------------------

SuiteReport suite_oracles(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "oracles";

    rep.properties.push_back(property(
        "closed form vs series engine (decaying families)", count, 1.0,
        [](Rng& r) {
            Families fam;
            fam.poly = fam.log = false;
            fam.decaying_only = true;
            const CatalogExpr f = random_expr(r, fam);
            const Complex x = clear_bound(r, f, {0.0}, 0.2, 2.5);
            const SumResult closed = frac_sum(f, 1.0, x);
            const SumResult series = frac_sum_series(f, x, 1e-10, 2'000'000);
            const double budget = series.err_estimate + 1e-9 * std::max(1.0, std::abs(closed.value));
            return std::abs(closed.value - series.value) / budget;
        },
        rng));

    rep.properties.push_back(property(
        "closed form vs Taylor engine (|x| <= 2)", count, 1e-8,
        [](Rng& r) {
            Families fam;
            fam.inv = fam.log = false;
            const CatalogExpr f = random_expr(r, fam);
            const Complex x = r.box(-1.4, 1.4, -1.4, 1.4);  // |x| <= 2
            const SumResult closed = frac_sum(f, 1.0, x);
            const SumResult taylor = frac_sum_taylor(f, x, 60);
            return rel_residual(taylor.value, closed.value);
        },
        rng));

    {
        // Euler's harmonic value at -1/2 through the series engine
        const CatalogExpr f = CatalogExpr::inverse_monomial(1);
        const SumResult s = frac_sum_series(f, Complex(-0.5, 0.0), 1e-8, 1'000'000);
        const double worst = std::abs(s.value - Complex(-2.0 * std::log(2.0), 0.0));
        rep.properties.push_back(
            {"series engine reproduces sum 1..-1/2 of 1/k = -2 ln 2", 1, worst, 1e-7, worst <= 1e-7});
    }

    return rep;
}

// --------------------------------------------------------------------------
// specfun
// --------------------------------------------------------------------------

double nonpos_int_distance(Complex z) {
    double m = std::round(-z.real());
    if (m < 0.0) m = 0.0;
    return std::hypot(z.real() + m, z.imag());
}

SuiteReport suite_specfun(std::uint64_t seed, int count) {
    Rng rng(seed);
    SuiteReport rep;
    rep.suite = "specfun";
    const int dense = std::max(count, 1000);

    // Recurrence residuals normalize by the largest participating magnitude:
    // near a pole the two psi values are huge and cancel, and double precision
    // can only promise each of them to ~1e-15 relative.
    rep.properties.push_back(property(
        "digamma recurrence psi(z+1) - psi(z) = 1/z", dense, 1e-12,
        [](Rng& r) {
            Complex z;
            do {
                z = r.box(-5.0, 20.0, -20.0, 20.0);
            } while (nonpos_int_distance(z) < 1e-3);
            const Complex hi = digamma(z + 1.0);
            const Complex lhs = hi - digamma(z);
            const double scale = std::max({1.0, std::abs(1.0 / z), std::abs(hi)});
            return std::abs(lhs - 1.0 / z) / scale;
        },
        rng));

    rep.properties.push_back(property(
        "polygamma recurrence, n = 1..6", dense, 1e-10,
        [](Rng& r) {
            Complex z;
            do {
                z = r.box(-5.0, 20.0, -20.0, 20.0);
            } while (nonpos_int_distance(z) < 1e-3);
            const int n = r.integer(1, 6);
            double nfact = 1.0;
            for (int j = 2; j <= n; ++j) nfact *= j;
            const Complex jump = (n % 2 == 0 ? 1.0 : -1.0) * nfact / pow_int(z, n + 1);
            const Complex hi = polygamma(n, z + 1.0);
            const Complex lhs = hi - polygamma(n, z);
            const double scale = std::max({1.0, std::abs(jump), std::abs(hi)});
            return std::abs(lhs - jump) / scale;
        },
        rng));

    rep.properties.push_back(property(
        "ln_gamma recurrence on (0, 50]", count, 1e-11,
        [](Rng& r) {
            const double x = r.uniform(1e-3, 50.0);
            const Complex lhs = ln_gamma(Complex(x + 1.0, 0.0)) - ln_gamma(Complex(x, 0.0));
            return std::abs(lhs - std::log(Complex(x, 0.0)));
        },
        rng));

    {
        // recurrence sum C(n+1,k) B_k^- = 0 holds exactly in rational arithmetic
        const auto& table = shared_bernoulli_table(BernoulliConvention::minus);
        double worst = 0.0;
        for (int n = 1; n <= table.bound(); ++n) {
            Rational acc = 0;
            for (int k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * table.value(k);
            if (acc != 0) worst = 1.0;
        }
        rep.properties.push_back(
            {"Bernoulli recurrence exact (rational)", table.bound(), worst, 0.0, worst == 0.0});
    }
    {
        // zeta(1-a) = -B_a/a through the same code path, a = 1..20
        double worst = 0.0;
        for (int a = 1; a <= 20; ++a)
            worst = std::max(worst, std::abs(zeta_int(1 - a) -
                                             Complex(-bernoulli_d(a, BernoulliConvention::plus) / a,
                                                     0.0)));
        rep.properties.push_back({"zeta(1-a) = -B_a/a structural identity", 20, worst, 0.0,
                                  worst == 0.0});
    }
    {
        // reference spot values
        double worst = 0.0;
        worst = std::max(worst, std::abs(digamma(1.0) - Complex(-euler_gamma, 0.0)));
        worst = std::max(worst, std::abs(digamma(2.0) - Complex(1.0 - euler_gamma, 0.0)));
        worst = std::max(worst,
                         std::abs(zeta_int(2) - Complex(kPi * kPi / 6.0, 0.0)));
        worst = std::max(worst, std::abs(polygamma(1, 1.0) - zeta_int(2)));
        worst = std::max(worst, std::abs(polygamma(2, 1.0) + 2.0 * zeta_int(3)));
        worst = std::max(worst, std::abs(ln_gamma(Complex(5.0, 0.0)) -
                                         Complex(std::log(24.0), 0.0)));
        worst = std::max(worst, std::abs(ln_gamma(Complex(0.5, 0.0)) -
                                         Complex(0.5 * std::log(kPi), 0.0)));
        rep.properties.push_back({"reference spot values", 7, worst, 1e-12, worst <= 1e-12});
    }

    return rep;
}

}  // namespace

Complex classical_loop_sum(const CatalogExpr& e, int n) {
    Complex acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += evaluate(e, Complex(static_cast<double>(k), 0.0));
    return acc;
}

std::vector<std::string> verify_suite_names() {
    return {"axioms", "table1", "euler-maclaurin", "derivative", "oracles", "specfun"};
}

SuiteReport run_verify_suite(const std::string& suite, std::uint64_t seed, int count) {
    if (count < 1) throw BoundsError("count must be positive");
    if (suite == "axioms") return suite_axioms(seed, count);
    if (suite == "table1") return suite_table1(seed, count);
    if (suite == "euler-maclaurin") return suite_euler_maclaurin(seed, count);
    if (suite == "derivative") return suite_derivative(seed, count);
    if (suite == "oracles") return suite_oracles(seed, count);
    if (suite == "specfun") return suite_specfun(seed, count);
    throw BoundsError("unknown verify suite '" + suite + "'");
}

}  // namespace fracsum

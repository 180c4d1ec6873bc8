#include "fracsum/sum.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fracsum/bernoulli.hpp"
#include "fracsum/essence.hpp"
#include "fracsum/specfun.hpp"

namespace fracsum {

namespace {

constexpr int kFaulhaberMax = 24;
constexpr double kDegenerateTol = 1e-12;

double factorial_d(int n) {
    double r = 1.0;
    for (int j = 2; j <= n; ++j) r *= j;
    return r;
}

// Faulhaber coefficient tables: sum_{k=1}^{t} k^a as a polynomial in t,
//   t^a + sum_{k=0}^{a} C(a,k) B^-_{a-k} t^{k+1}/(k+1),
// generated exactly in rational arithmetic, converted once.
const std::vector<std::vector<double>>& faulhaber_tables() {
    static const auto tables = [] {
        std::vector<std::vector<double>> t(kFaulhaberMax + 1);
        for (int a = 1; a <= kFaulhaberMax; ++a) {
            std::vector<Rational> r(static_cast<std::size_t>(a) + 2, Rational(0));
            r[static_cast<std::size_t>(a)] += 1;
            for (int k = 0; k <= a; ++k)
                r[static_cast<std::size_t>(k) + 1] +=
                    Rational(binomial(a, k)) * bernoulli(a - k, BernoulliConvention::minus) /
                    (k + 1);
            std::vector<double> d(r.size());
            for (std::size_t j = 0; j < r.size(); ++j) d[j] = r[j].convert_to<double>();
            t[static_cast<std::size_t>(a)] = std::move(d);
        }
        return t;
    }();
    return tables;
}

Complex horner(const std::vector<double>& c, Complex t) {
    Complex v = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * t + c[j];
    return v;
}

void require_regular_bound(Complex t, const BasisFunction& b) {
    // psi^{(a-1)}(t+1) / ln_gamma(t+1) poles sit at t in {-1, -2, ...}
    if (is_nonpositive_integer(t + 1.0))
        throw PoleError("summation bound " + std::to_string(t.real()) +
                        " hits a pole of the closed form for " + describe(b));
}

void require_summable(const CatalogExpr& e) {
    const auto rep = check_summable(e);
    if (!rep.summable) throw NonSummableError(rep.reason);
    for (const auto& t : e.terms()) {
        if (t.basis.kind != BasisKind::exponential && t.basis.kind != BasisKind::exp_times_x)
            continue;
        if (std::abs(std::exp(t.basis.rate) - 1.0) < kDegenerateTol)
            throw NonSummableError(
                "exponential parameter is a nonzero multiple of 2*pi*i; the geometric closed "
                "form degenerates for " +
                describe(t.basis));
    }
}

// sum_{k=1}^{t} basis(k), the per-family closed form.
Complex basis_sum_from_1(const BasisFunction& b, Complex t) {
    switch (b.kind) {
        case BasisKind::constant:
            return t;
        case BasisKind::monomial: {
            if (b.power > kFaulhaberMax)
                throw BoundsError("monomial degree exceeds the Faulhaber table bound (24)");
            return horner(faulhaber_tables()[static_cast<std::size_t>(b.power)], t);
        }
        case BasisKind::inverse_monomial: {
            require_regular_bound(t, b);
            const int a = b.power;
            const Complex c_a = a == 1 ? Complex(euler_gamma, 0.0) : zeta_int(a);
            const double sign = (a % 2 == 1) ? 1.0 : -1.0;  // (-1)^{a+1}
            return c_a + sign / factorial_d(a - 1) * polygamma(a - 1, t + 1.0);
        }
        case BasisKind::exponential: {
            const Complex u = std::exp(b.rate);
            return u * (std::exp(b.rate * t) - 1.0) / (u - 1.0);
        }
        case BasisKind::exp_times_x: {
            const Complex u = std::exp(b.rate);
            const Complex et = std::exp(b.rate * t);
            return u / (u - 1.0) * (t * et - (et - 1.0) / (u - 1.0));
        }
        case BasisKind::logarithm:
            require_regular_bound(t, b);
            return ln_gamma(t + 1.0);
    }
    return 0.0;
}

// --- series engine tail machinery ------------------------------------------

struct TermTail {
    Complex value{};
    double error = 0.0;
};

// Tail of sum_{v>N} (f(v) - f(v+x)) for a single catalog term.
TermTail term_tail(const CatalogTerm& t, Complex x, double n) {
    TermTail r;
    switch (t.basis.kind) {
        case BasisKind::inverse_monomial: {
            const int a = t.basis.power;
            const Complex w1 = n + t.shift;
            const Complex w2 = n + x + t.shift;
            // Euler-Maclaurin: integral - g(N)/2 - g'(N)/12, remainder ~ g'''(N)
            const Complex integral =
                a == 1 ? std::log(w2 / w1)
                       : (pow_int(w1, 1 - a) - pow_int(w2, 1 - a)) / (a - 1.0);
            const Complex g = pow_int(w1, -a) - pow_int(w2, -a);
            const Complex gp = -static_cast<double>(a) *
                               (pow_int(w1, -a - 1) - pow_int(w2, -a - 1));
            r.value = t.coeff * (integral - 0.5 * g - gp / 12.0);
            const double a3 = static_cast<double>(a) * (a + 1) * (a + 2) / 720.0;
            r.error = 4.0 * std::abs(t.coeff) * a3 *
                      std::abs(pow_int(w1, -a - 3) - pow_int(w2, -a - 3));
            return r;
        }
        case BasisKind::exponential: {
            const double q = std::abs(std::exp(t.basis.rate));
            const double amp = std::abs(1.0 - std::exp(t.basis.rate * x));
            r.error = std::abs(t.coeff) * amp * std::pow(q, n + 1.0) / (1.0 - q);
            return r;
        }
        case BasisKind::exp_times_x: {
            const double q = std::abs(std::exp(t.basis.rate));
            const double a = std::abs(1.0 - std::exp(t.basis.rate * x));
            const double b = std::abs(x) * std::abs(std::exp(t.basis.rate * x));
            const double qn = std::pow(q, n + 1.0);
            const double sum_v = qn * ((n + 1.0) - n * q) / ((1.0 - q) * (1.0 - q));
            const double sum_1 = qn / (1.0 - q);
            r.error = std::abs(t.coeff) * (a * sum_v + b * sum_1);
            return r;
        }
        default:
            return r;  // non-decaying kinds are rejected before the loop
    }
}

}  // namespace

const char* method_name(SumMethod m) {
    switch (m) {
        case SumMethod::closed_form: return "closed_form";
        case SumMethod::series: return "series";
        case SumMethod::taylor: return "taylor";
    }
    return "?";
}

SumResult frac_sum(const CatalogExpr& e, Complex x, Complex y) {
    require_summable(e);
    Complex v = 0.0;
    for (const auto& t : e.terms()) {
        const Complex hi = basis_sum_from_1(t.basis, y + t.shift);
        const Complex lo = basis_sum_from_1(t.basis, x - 1.0 + t.shift);
        v += t.coeff * (hi - lo);
    }
    return {v, SumMethod::closed_form, 0.0, 0, true};
}

SumResult frac_sum_series(const CatalogExpr& e, Complex x, double tol, long long max_terms) {
    if (tol <= 0.0) throw BoundsError("series tolerance must be positive");
    if (max_terms < 1) throw BoundsError("max_terms must be positive");
    require_summable(e);

    double max_shift = 0.0;
    for (const auto& t : e.terms()) {
        switch (t.basis.kind) {
            case BasisKind::constant:
            case BasisKind::monomial:
                throw NonDecayingError("polynomial terms do not decay at +infinity");
            case BasisKind::logarithm:
                throw NonDecayingError("ln does not decay at +infinity");
            case BasisKind::inverse_monomial:
                if (is_nonpositive_integer(t.shift + 1.0))
                    throw PoleError("series hits the pole of " + describe(t.basis) +
                                    " at an integer argument");
                if (is_nonpositive_integer(x + t.shift + 1.0))
                    throw PoleError("shifted bound lands on a pole of " + describe(t.basis));
                max_shift = std::max(max_shift, std::abs(t.shift));
                break;
            case BasisKind::exponential:
            case BasisKind::exp_times_x:
                if (std::abs(std::exp(t.basis.rate)) >= 1.0 - kDegenerateTol)
                    throw NonDecayingError("exponential term with |e^z| >= 1 does not decay");
                break;
        }
    }

    const double n_min = std::max(8.0, 2.0 * (std::abs(x) + max_shift) + 4.0);
    Complex partial = 0.0;
    long long n = 0;
    double err = std::numeric_limits<double>::infinity();
    bool converged = false;
    while (n < max_terms) {
        ++n;
        const Complex kn(static_cast<double>(n), 0.0);
        partial += evaluate(e, kn) - evaluate(e, kn + x);
        if ((n % 8 == 0 && static_cast<double>(n) >= n_min) || n == max_terms) {
            err = 0.0;
            for (const auto& t : e.terms()) err += term_tail(t, x, static_cast<double>(n)).error;
            if (err < tol) {
                converged = true;
                break;
            }
        }
    }
    Complex correction = 0.0;
    err = 0.0;
    for (const auto& t : e.terms()) {
        const TermTail tt = term_tail(t, x, static_cast<double>(n));
        correction += tt.value;
        err += tt.error;
    }
    const double rounding = 1e-15 * (1.0 + std::abs(partial));
    return {partial + correction, SumMethod::series, err + rounding, n, converged};
}

SumResult frac_sum_taylor(const CatalogExpr& e, Complex x, int n_terms) {
    if (n_terms < 1) throw BoundsError("n_terms must be positive");
    for (const auto& t : e.terms()) {
        switch (t.basis.kind) {
            case BasisKind::constant:
            case BasisKind::monomial:
            case BasisKind::exponential:
            case BasisKind::exp_times_x:
                break;
            default:
                throw UnsupportedError("Taylor engine supports polynomial and exponential "
                                       "content only; got " +
                                       describe(t.basis));
        }
    }
    require_summable(e);

    CatalogExpr d = e;      // f^{(k-1)} as k advances
    Complex factor = 1.0;   // x^k / k!
    Complex value = 0.0;
    for (int k = 1; k <= n_terms; ++k) {
        factor *= x / static_cast<double>(k);
        if (!d.is_zero()) value += essence(d).value * factor;
        d = differentiate(d);
    }
    const double err =
        d.is_zero() ? 0.0
                    : std::abs(essence(d).value * factor * x / (n_terms + 1.0));
    return {value, SumMethod::taylor, err, n_terms, true};
}

}  // namespace fracsum

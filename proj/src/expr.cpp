#include "fracsum/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fracsum {

namespace {

constexpr int kMaxPower = 64;
constexpr double kHalfPeriodTol = 1e-9;

// Exact in double for the powers the catalog admits.
double binom_d(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return std::round(r);
}

struct TermKeyLess {
    bool operator()(const CatalogTerm& a, const CatalogTerm& b) const {
        if (a.basis.kind != b.basis.kind) return a.basis.kind < b.basis.kind;
        if (a.basis.power != b.basis.power) return a.basis.power < b.basis.power;
        if (a.basis.rate.real() != b.basis.rate.real())
            return a.basis.rate.real() < b.basis.rate.real();
        if (a.basis.rate.imag() != b.basis.rate.imag())
            return a.basis.rate.imag() < b.basis.rate.imag();
        if (a.shift.real() != b.shift.real()) return a.shift.real() < b.shift.real();
        return a.shift.imag() < b.shift.imag();
    }
};

bool same_key(const CatalogTerm& a, const CatalogTerm& b) {
    return a.basis.kind == b.basis.kind && a.basis.power == b.basis.power &&
           a.basis.rate == b.basis.rate && a.shift == b.shift;
}

void push_normalized(std::vector<CatalogTerm>& out, CatalogTerm t) {
    switch (t.basis.kind) {
        case BasisKind::constant:
            t.shift = 0.0;
            out.push_back(t);
            return;
        case BasisKind::monomial:
            if (t.basis.power == 0) {
                out.push_back({t.coeff, 0.0, BasisFunction::constant()});
                return;
            }
            if (t.shift != 0.0) {
                // (x+s)^a expanded binomially; canonical polynomials are shift-free
                const int a = t.basis.power;
                std::vector<Complex> sp(static_cast<std::size_t>(a) + 1);  // s^0 .. s^a
                Complex spow = 1.0;
                for (int m = 0; m <= a; ++m) {
                    sp[static_cast<std::size_t>(m)] = spow;
                    spow *= t.shift;
                }
                for (int j = 0; j <= a; ++j) {
                    const Complex c = t.coeff * binom_d(a, j) * sp[static_cast<std::size_t>(a - j)];
                    if (j == 0)
                        out.push_back({c, 0.0, BasisFunction::constant()});
                    else
                        out.push_back({c, 0.0, BasisFunction::monomial(j)});
                }
                return;
            }
            out.push_back(t);
            return;
        case BasisKind::inverse_monomial:
        case BasisKind::logarithm:
            out.push_back(t);
            return;
        case BasisKind::exponential:
            if (t.basis.rate == 0.0) {
                out.push_back({t.coeff, 0.0, BasisFunction::constant()});
                return;
            }
            if (t.shift != 0.0) {
                t.coeff *= std::exp(t.basis.rate * t.shift);
                t.shift = 0.0;
            }
            out.push_back(t);
            return;
        case BasisKind::exp_times_x:
            if (t.basis.rate == 0.0) {
                push_normalized(out, {t.coeff, t.shift, BasisFunction::monomial(1)});
                return;
            }
            if (t.shift != 0.0) {
                // e^{z(x+s)}(x+s) = e^{zs} e^{zx} x + s e^{zs} e^{zx}
                const Complex f = std::exp(t.basis.rate * t.shift);
                out.push_back({t.coeff * f, 0.0, BasisFunction::exp_times_x(t.basis.rate)});
                out.push_back(
                    {t.coeff * f * t.shift, 0.0, BasisFunction::exponential(t.basis.rate)});
                return;
            }
            out.push_back(t);
            return;
    }
}

std::vector<CatalogTerm> canonicalize(const std::vector<CatalogTerm>& in) {
    std::vector<CatalogTerm> flat;
    flat.reserve(in.size());
    for (const auto& t : in) push_normalized(flat, t);
    std::sort(flat.begin(), flat.end(), TermKeyLess{});
    std::vector<CatalogTerm> out;
    for (const auto& t : flat) {
        if (!out.empty() && same_key(out.back(), t))
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const CatalogTerm& t) { return t.coeff == 0.0; }),
              out.end());
    return out;
}

}  // namespace

BasisFunction BasisFunction::monomial(int a) {
    if (a < 0 || a > kMaxPower) throw BoundsError("monomial power outside [0, 64]");
    return {BasisKind::monomial, a, {}};
}

BasisFunction BasisFunction::inverse_monomial(int a) {
    if (a < 1 || a > kMaxPower) throw BoundsError("inverse power outside [1, 64]");
    return {BasisKind::inverse_monomial, a, {}};
}

CatalogExpr::CatalogExpr(std::vector<CatalogTerm> terms) : terms_(canonicalize(terms)) {}

CatalogExpr CatalogExpr::constant(Complex c) {
    return CatalogExpr({{c, 0.0, BasisFunction::constant()}});
}
CatalogExpr CatalogExpr::monomial(int a, Complex coeff) {
    return CatalogExpr({{coeff, 0.0, BasisFunction::monomial(a)}});
}
CatalogExpr CatalogExpr::inverse_monomial(int a, Complex shift, Complex coeff) {
    return CatalogExpr({{coeff, shift, BasisFunction::inverse_monomial(a)}});
}
CatalogExpr CatalogExpr::exponential(Complex z, Complex coeff) {
    return CatalogExpr({{coeff, 0.0, BasisFunction::exponential(z)}});
}
CatalogExpr CatalogExpr::exp_times_x(Complex z, Complex coeff) {
    return CatalogExpr({{coeff, 0.0, BasisFunction::exp_times_x(z)}});
}
CatalogExpr CatalogExpr::logarithm(Complex shift, Complex coeff) {
    return CatalogExpr({{coeff, shift, BasisFunction::logarithm()}});
}

bool CatalogExpr::is_polynomial() const noexcept {
    for (const auto& t : terms_)
        if (t.basis.kind != BasisKind::constant && t.basis.kind != BasisKind::monomial)
            return false;
    return true;
}

int CatalogExpr::degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) {
        if (t.basis.kind == BasisKind::constant)
            d = std::max(d, 0);
        else if (t.basis.kind == BasisKind::monomial)
            d = std::max(d, t.basis.power);
    }
    return d;
}

bool CatalogExpr::is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].basis.kind == BasisKind::constant);
}

Complex CatalogExpr::constant_value() const {
    if (terms_.empty()) return 0.0;
    if (!is_constant()) throw BoundsError("expression is not a constant");
    return terms_[0].coeff;
}

CatalogExpr& CatalogExpr::operator+=(const CatalogExpr& rhs) {
    std::vector<CatalogTerm> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    terms_ = canonicalize(all);
    return *this;
}

CatalogExpr& CatalogExpr::operator-=(const CatalogExpr& rhs) { return *this += -rhs; }

CatalogExpr& CatalogExpr::operator*=(Complex s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

CatalogExpr CatalogExpr::operator-() const {
    CatalogExpr r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Complex evaluate(const CatalogExpr& e, Complex x) {
    Complex v = 0.0;
    for (const auto& t : e.terms()) {
        const Complex w = x + t.shift;
        switch (t.basis.kind) {
            case BasisKind::constant:
                v += t.coeff;
                break;
            case BasisKind::monomial:
                v += t.coeff * pow_int(w, t.basis.power);
                break;
            case BasisKind::inverse_monomial:
                if (w == 0.0) break;  // extension by zero
                v += t.coeff / pow_int(w, t.basis.power);
                break;
            case BasisKind::exponential:
                v += t.coeff * std::exp(t.basis.rate * w);
                break;
            case BasisKind::exp_times_x:
                v += t.coeff * std::exp(t.basis.rate * w) * w;
                break;
            case BasisKind::logarithm:
                if (w == 0.0) break;  // extension by zero
                v += t.coeff * std::log(w);
                break;
        }
    }
    return v;
}

CatalogExpr differentiate(const CatalogExpr& e) {
    std::vector<CatalogTerm> out;
    for (const auto& t : e.terms()) {
        switch (t.basis.kind) {
            case BasisKind::constant:
                break;
            case BasisKind::monomial: {
                const int a = t.basis.power;
                out.push_back({t.coeff * static_cast<double>(a), t.shift,
                               a == 1 ? BasisFunction::constant() : BasisFunction::monomial(a - 1)});
                break;
            }
            case BasisKind::inverse_monomial: {
                const int a = t.basis.power;
                out.push_back({-t.coeff * static_cast<double>(a), t.shift,
                               BasisFunction::inverse_monomial(a + 1)});
                break;
            }
            case BasisKind::exponential:
                out.push_back({t.coeff * t.basis.rate, t.shift, t.basis});
                break;
            case BasisKind::exp_times_x:
                out.push_back({t.coeff * t.basis.rate, t.shift, t.basis});
                out.push_back({t.coeff, t.shift, BasisFunction::exponential(t.basis.rate)});
                break;
            case BasisKind::logarithm:
                out.push_back({t.coeff, t.shift, BasisFunction::inverse_monomial(1)});
                break;
        }
    }
    return CatalogExpr(std::move(out));
}

CatalogExpr antiderivative(const CatalogExpr& e) {
    std::vector<CatalogTerm> out;
    for (const auto& t : e.terms()) {
        switch (t.basis.kind) {
            case BasisKind::constant:
                out.push_back({t.coeff, 0.0, BasisFunction::monomial(1)});
                break;
            case BasisKind::monomial: {
                const int a = t.basis.power;
                out.push_back({t.coeff / (a + 1.0), t.shift, BasisFunction::monomial(a + 1)});
                break;
            }
            case BasisKind::inverse_monomial: {
                const int a = t.basis.power;
                if (a == 1)
                    out.push_back({t.coeff, t.shift, BasisFunction::logarithm()});
                else
                    out.push_back(
                        {-t.coeff / (a - 1.0), t.shift, BasisFunction::inverse_monomial(a - 1)});
                break;
            }
            case BasisKind::exponential:
                out.push_back({t.coeff / t.basis.rate, t.shift, t.basis});
                break;
            case BasisKind::exp_times_x: {
                const Complex z = t.basis.rate;
                out.push_back({t.coeff / z, t.shift, t.basis});
                out.push_back({-t.coeff / (z * z), t.shift, BasisFunction::exponential(z)});
                break;
            }
            case BasisKind::logarithm:
                throw NoPrimitiveError(
                    "ln has no antiderivative in the catalog (x ln x - x is outside it)");
        }
    }
    return CatalogExpr(std::move(out));
}

CatalogExpr translate(const CatalogExpr& e, Complex s) {
    std::vector<CatalogTerm> out = e.terms();
    for (auto& t : out) t.shift += s;
    return CatalogExpr(std::move(out));
}

SummabilityReport check_summable(const CatalogExpr& e) {
    SummabilityReport rep;
    for (const auto& t : e.terms()) {
        if (t.basis.kind != BasisKind::exponential && t.basis.kind != BasisKind::exp_times_x)
            continue;
        if (std::abs(std::exp(t.basis.rate / 2.0) + 1.0) < kHalfPeriodTol)
            rep.offending.push_back(t);
    }
    if (!rep.offending.empty()) {
        rep.summable = false;
        rep.reason =
            "exponential parameter is an odd multiple of 2*pi*i: f(x + 1/2) = -f(x) with "
            "f(1/2) != 0 is inconsistent with the summation axioms";
    }
    return rep;
}

double bound_pole_distance(const CatalogExpr& e, Complex t) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& term : e.terms()) {
        if (term.basis.kind != BasisKind::inverse_monomial &&
            term.basis.kind != BasisKind::logarithm)
            continue;
        const Complex w = t + term.shift;
        double m = std::round(-w.real());
        if (m < 1.0) m = 1.0;
        best = std::min(best, std::hypot(w.real() + m, w.imag()));
    }
    return best;
}

bool approx_equal(const CatalogExpr& a, const CatalogExpr& b, double tol) {
    std::vector<bool> used(b.terms().size(), false);
    auto near = [tol](Complex u, Complex v) { return std::abs(u - v) <= tol * (1.0 + std::abs(u)); };
    for (const auto& ta : a.terms()) {
        bool matched = false;
        for (std::size_t j = 0; j < b.terms().size(); ++j) {
            if (used[j]) continue;
            const auto& tb = b.terms()[j];
            if (ta.basis.kind != tb.basis.kind || ta.basis.power != tb.basis.power) continue;
            if (!near(ta.basis.rate, tb.basis.rate) || !near(ta.shift, tb.shift)) continue;
            if (!near(ta.coeff, tb.coeff)) return false;
            used[j] = true;
            matched = true;
            break;
        }
        if (!matched && std::abs(ta.coeff) > tol) return false;
    }
    for (std::size_t j = 0; j < b.terms().size(); ++j)
        if (!used[j] && std::abs(b.terms()[j].coeff) > tol) return false;
    return true;
}

std::string describe(const BasisFunction& b) {
    std::ostringstream os;
    switch (b.kind) {
        case BasisKind::constant: os << "1"; break;
        case BasisKind::monomial: os << "x^" << b.power; break;
        case BasisKind::inverse_monomial: os << "x^(-" << b.power << ")"; break;
        case BasisKind::exponential:
            os << "exp((" << b.rate.real() << (b.rate.imag() < 0 ? "" : "+") << b.rate.imag()
               << "i)*x)";
            break;
        case BasisKind::exp_times_x:
            os << "exp((" << b.rate.real() << (b.rate.imag() < 0 ? "" : "+") << b.rate.imag()
               << "i)*x)*x";
            break;
        case BasisKind::logarithm: os << "ln(x)"; break;
    }
    return os.str();
}

}  // namespace fracsum

#include "fracsum/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

namespace fracsum {

namespace {

constexpr int kDegreeCap = 16;
constexpr double kMatchTol = 1e-9;
constexpr double kIntTol = 1e-12;

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { num, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
    Complex value{};
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t at = pos_;
        if (pos_ >= src_.size()) return {Tok::end, at, ""};
        const char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::plus, at, "+"};
            case '-': ++pos_; return {Tok::minus, at, "-"};
            case '*': ++pos_; return {Tok::star, at, "*"};
            case '/': ++pos_; return {Tok::slash, at, "/"};
            case '^': ++pos_; return {Tok::caret, at, "^"};
            case '(': ++pos_; return {Tok::lparen, at, "("};
            case ')': ++pos_; return {Tok::rparen, at, ")"};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(at);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            Token t{Tok::ident, at, std::string(src_.substr(pos_, end - pos_))};
            pos_ = end;
            return t;
        }
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

private:
    Token lex_number(std::size_t at) {
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            if (end >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[end])))
                throw ParseError(end, "expected digits after decimal point");
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        }
        double v = 0.0;
        const auto res = std::from_chars(src_.data() + pos_, src_.data() + end, v);
        if (res.ec != std::errc{}) throw ParseError(at, "malformed number");
        bool imaginary = false;
        if (end < src_.size() && src_[end] == 'i') {
            const bool ident_follows =
                end + 1 < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end + 1])) ||
                                          src_[end + 1] == '_');
            if (!ident_follows) {
                imaginary = true;
                ++end;
            }
        }
        Token t{Tok::num, at, std::string(src_.substr(pos_, end - pos_))};
        t.value = imaginary ? Complex(0.0, v) : Complex(v, 0.0);
        pos_ = end;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

SyntaxTree make_node(NodeKind k, std::vector<SyntaxTree> children) {
    SyntaxTree t;
    t.kind = k;
    t.children = std::move(children);
    return t;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    SyntaxTree run() {
        SyntaxTree t = parse_expr();
        if (cur_.kind != Tok::end)
            throw ParseError(cur_.offset, "unexpected token '" + cur_.text + "'");
        return t;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    SyntaxTree parse_expr() {
        SyntaxTree t = parse_term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const NodeKind op = cur_.kind == Tok::plus ? NodeKind::add : NodeKind::sub;
            advance();
            t = make_node(op, {std::move(t), parse_term()});
        }
        return t;
    }

    SyntaxTree parse_term() {
        SyntaxTree t = parse_unary();
        while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
            const NodeKind op = cur_.kind == Tok::star ? NodeKind::mul : NodeKind::div;
            advance();
            t = make_node(op, {std::move(t), parse_unary()});
        }
        return t;
    }

    SyntaxTree parse_unary() {
        if (cur_.kind == Tok::minus) {
            advance();
            return make_node(NodeKind::negate, {parse_unary()});
        }
        return parse_power();
    }

    SyntaxTree parse_power() {
        SyntaxTree base = parse_atom();
        if (cur_.kind == Tok::caret) {
            advance();
            return make_node(NodeKind::pow, {std::move(base), parse_unary()});
        }
        return base;
    }

    SyntaxTree parse_atom() {
        if (cur_.kind == Tok::num) {
            SyntaxTree t;
            t.kind = NodeKind::number;
            t.number = cur_.value;
            advance();
            return t;
        }
        if (cur_.kind == Tok::lparen) {
            advance();
            SyntaxTree t = parse_expr();
            expect(Tok::rparen, "expected ')'");
            return t;
        }
        if (cur_.kind == Tok::ident) {
            const Token name = cur_;
            advance();
            if (name.text == "k") {
                SyntaxTree t;
                t.kind = NodeKind::variable;
                return t;
            }
            if (auto c = const_name(name.text)) {
                SyntaxTree t;
                t.kind = NodeKind::constant;
                t.cname = *c;
                return t;
            }
            if (auto f = call_name(name.text)) {
                expect(Tok::lparen, "expected '(' after function name");
                SyntaxTree arg = parse_expr();
                expect(Tok::rparen, "expected ')'");
                SyntaxTree t;
                t.kind = NodeKind::call;
                t.fn = *f;
                t.children.push_back(std::move(arg));
                return t;
            }
            throw ParseError(name.offset, "unknown identifier '" + name.text + "'");
        }
        throw ParseError(cur_.offset, "expected an expression");
    }

    void expect(Tok k, const char* msg) {
        if (cur_.kind != k) throw ParseError(cur_.offset, msg);
        advance();
    }

    static std::optional<ConstName> const_name(const std::string& s) {
        if (s == "pi") return ConstName::pi;
        if (s == "e") return ConstName::e;
        if (s == "gamma") return ConstName::gamma;
        if (s == "i") return ConstName::i;
        return std::nullopt;
    }

    static std::optional<CallName> call_name(const std::string& s) {
        if (s == "exp") return CallName::exp;
        if (s == "ln") return CallName::ln;
        if (s == "sin") return CallName::sin;
        if (s == "cos") return CallName::cos;
        return std::nullopt;
    }

    Lexer lexer_;
    Token cur_{Tok::end, 0, ""};
};

std::string fmt_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Complex const_value(ConstName c) {
    switch (c) {
        case ConstName::pi: return std::numbers::pi;
        case ConstName::e: return std::numbers::e;
        case ConstName::gamma: return euler_gamma;
        case ConstName::i: return Complex(0.0, 1.0);
    }
    return 0.0;
}

const char* const_text(ConstName c) {
    switch (c) {
        case ConstName::pi: return "pi";
        case ConstName::e: return "e";
        case ConstName::gamma: return "gamma";
        case ConstName::i: return "i";
    }
    return "?";
}

const char* call_text(CallName f) {
    switch (f) {
        case CallName::exp: return "exp";
        case CallName::ln: return "ln";
        case CallName::sin: return "sin";
        case CallName::cos: return "cos";
    }
    return "?";
}

}  // namespace

SyntaxTree parse(std::string_view src) { return Parser(src).run(); }

std::string unparse(const SyntaxTree& t) {
    switch (t.kind) {
        case NodeKind::number:
            return t.number.imag() == 0.0 ? fmt_number(t.number.real())
                                          : fmt_number(t.number.imag()) + "i";
        case NodeKind::constant: return const_text(t.cname);
        case NodeKind::variable: return "k";
        case NodeKind::negate: return "(-" + unparse(t.children[0]) + ")";
        case NodeKind::add: return "(" + unparse(t.children[0]) + "+" + unparse(t.children[1]) + ")";
        case NodeKind::sub: return "(" + unparse(t.children[0]) + "-" + unparse(t.children[1]) + ")";
        case NodeKind::mul: return "(" + unparse(t.children[0]) + "*" + unparse(t.children[1]) + ")";
        case NodeKind::div: return "(" + unparse(t.children[0]) + "/" + unparse(t.children[1]) + ")";
        case NodeKind::pow: return "(" + unparse(t.children[0]) + "^" + unparse(t.children[1]) + ")";
        case NodeKind::call: return std::string(call_text(t.fn)) + "(" + unparse(t.children[0]) + ")";
    }
    return "?";
}

bool tree_equal(const SyntaxTree& a, const SyntaxTree& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    switch (a.kind) {
        case NodeKind::number:
            if (a.number != b.number) return false;
            break;
        case NodeKind::constant:
            if (a.cname != b.cname) return false;
            break;
        case NodeKind::call:
            if (a.fn != b.fn) return false;
            break;
        default: break;
    }
    for (std::size_t j = 0; j < a.children.size(); ++j)
        if (!tree_equal(a.children[j], b.children[j])) return false;
    return true;
}

bool contains_variable(const SyntaxTree& t) {
    if (t.kind == NodeKind::variable) return true;
    for (const auto& c : t.children)
        if (contains_variable(c)) return true;
    return false;
}

Complex evaluate_tree(const SyntaxTree& t, Complex k) {
    switch (t.kind) {
        case NodeKind::number: return t.number;
        case NodeKind::constant: return const_value(t.cname);
        case NodeKind::variable: return k;
        case NodeKind::negate: return -evaluate_tree(t.children[0], k);
        case NodeKind::add: return evaluate_tree(t.children[0], k) + evaluate_tree(t.children[1], k);
        case NodeKind::sub: return evaluate_tree(t.children[0], k) - evaluate_tree(t.children[1], k);
        case NodeKind::mul: return evaluate_tree(t.children[0], k) * evaluate_tree(t.children[1], k);
        case NodeKind::div: return evaluate_tree(t.children[0], k) / evaluate_tree(t.children[1], k);
        case NodeKind::pow: {
            const Complex base = evaluate_tree(t.children[0], k);
            const Complex ex = evaluate_tree(t.children[1], k);
            if (ex.imag() == 0.0 && ex.real() == std::round(ex.real()) &&
                std::fabs(ex.real()) <= 64.0)
                return pow_int(base, static_cast<int>(ex.real()));
            const Complex b = base.imag() == 0.0 ? Complex(base.real(), 0.0) : base;
            return std::pow(b, ex);
        }
        case NodeKind::call: {
            const Complex a = evaluate_tree(t.children[0], k);
            switch (t.fn) {
                case CallName::exp: return std::exp(a);
                case CallName::ln: return std::log(a);
                case CallName::sin: return std::sin(a);
                case CallName::cos: return std::cos(a);
            }
            break;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Canonicalization into the catalog
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void unsupported(const SyntaxTree& node, const std::string& why) {
    throw UnsupportedError(why + ": " + unparse(node));
}

// Clear a negative-zero imaginary part so the principal logarithm maps
// negative reals to +pi i (so (-1)^k folds to exp(pi*i*k), not its conjugate).
Complex principal(Complex u) { return u.imag() == 0.0 ? Complex(u.real(), 0.0) : u; }

std::optional<std::vector<Complex>> poly_coeffs(const CatalogExpr& e) {
    if (!e.is_polynomial()) return std::nullopt;
    std::vector<Complex> c(static_cast<std::size_t>(std::max(e.degree(), 0)) + 1, 0.0);
    for (const auto& t : e.terms()) {
        if (t.basis.kind == BasisKind::constant)
            c[0] += t.coeff;
        else
            c[static_cast<std::size_t>(t.basis.power)] += t.coeff;
    }
    return c;
}

// alpha*k + beta
std::optional<std::pair<Complex, Complex>> linear_parts(const CatalogExpr& e) {
    auto c = poly_coeffs(e);
    if (!c || c->size() > 2) return std::nullopt;
    const Complex beta = (*c)[0];
    const Complex alpha = c->size() == 2 ? (*c)[1] : Complex(0.0);
    return std::make_pair(alpha, beta);
}

void term_product_into(const CatalogTerm& p, const CatalogTerm& q, std::vector<CatalogTerm>& out,
                       const SyntaxTree& node) {
    if (p.basis.kind == BasisKind::constant) {
        CatalogTerm r = q;
        r.coeff *= p.coeff;
        out.push_back(r);
        return;
    }
    if (q.basis.kind == BasisKind::constant) {
        term_product_into(q, p, out, node);
        return;
    }
    const Complex c = p.coeff * q.coeff;
    const auto ka = p.basis.kind;
    const auto kb = q.basis.kind;
    if (ka == BasisKind::monomial && kb == BasisKind::monomial) {
        const int d = p.basis.power + q.basis.power;
        if (d > kDegreeCap) unsupported(node, "polynomial degree cap (16) exceeded");
        out.push_back({c, 0.0, BasisFunction::monomial(d)});
        return;
    }
    if (ka == BasisKind::monomial && kb == BasisKind::exponential) {
        if (p.basis.power != 1) unsupported(node, "x^a * exp(zx) with a > 1 is outside the catalog");
        out.push_back({c, 0.0, BasisFunction::exp_times_x(q.basis.rate)});
        return;
    }
    if (ka == BasisKind::exponential && kb == BasisKind::monomial) {
        term_product_into(q, p, out, node);
        return;
    }
    if (ka == BasisKind::exponential && kb == BasisKind::exponential) {
        out.push_back({c, 0.0, BasisFunction::exponential(p.basis.rate + q.basis.rate)});
        return;
    }
    if (ka == BasisKind::exponential && kb == BasisKind::exp_times_x) {
        out.push_back({c, 0.0, BasisFunction::exp_times_x(p.basis.rate + q.basis.rate)});
        return;
    }
    if (ka == BasisKind::exp_times_x && kb == BasisKind::exponential) {
        out.push_back({c, 0.0, BasisFunction::exp_times_x(p.basis.rate + q.basis.rate)});
        return;
    }
    unsupported(node, "product outside the catalog");
}

CatalogExpr multiply(const CatalogExpr& a, const CatalogExpr& b, const SyntaxTree& node) {
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    std::vector<CatalogTerm> out;
    for (const auto& p : a.terms())
        for (const auto& q : b.terms()) term_product_into(p, q, out, node);
    return CatalogExpr(std::move(out));
}

CatalogExpr divide(const CatalogExpr& a, const CatalogExpr& b, const SyntaxTree& node) {
    if (b.is_zero()) unsupported(node, "division by zero");
    if (b.is_constant()) return a * (1.0 / b.constant_value());
    if (b.terms().size() == 1 && b.terms()[0].basis.kind == BasisKind::exponential) {
        const auto& t = b.terms()[0];
        return multiply(a, CatalogExpr::exponential(-t.basis.rate, 1.0 / t.coeff), node);
    }
    const auto pc = poly_coeffs(b);
    if (!pc) unsupported(node, "unsupported denominator");
    if (!a.is_constant()) unsupported(node, "non-constant numerator over a polynomial denominator");
    const Complex num = a.constant_value();
    const auto& c = *pc;
    const int d = static_cast<int>(c.size()) - 1;
    double scale = 0.0;
    for (const auto& cj : c) scale = std::max(scale, std::abs(cj));

    // c_d (k+s)^d
    {
        const Complex s = c[static_cast<std::size_t>(d - 1)] / (c[static_cast<std::size_t>(d)] *
                                                                static_cast<double>(d));
        bool ok = true;
        Complex spow = 1.0;
        std::vector<Complex> sp(static_cast<std::size_t>(d) + 1);
        for (int m = 0; m <= d; ++m) {
            sp[static_cast<std::size_t>(m)] = spow;
            spow *= s;
        }
        auto binom = [](int n, int k) {
            double r = 1.0;
            for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
            return std::round(r);
        };
        for (int j = 0; j <= d && ok; ++j) {
            const Complex expected =
                c[static_cast<std::size_t>(d)] * binom(d, j) * sp[static_cast<std::size_t>(d - j)];
            ok = std::abs(c[static_cast<std::size_t>(j)] - expected) <= kMatchTol * scale;
        }
        if (ok) return CatalogExpr::inverse_monomial(d, s, num / c[static_cast<std::size_t>(d)]);
    }

    // c_2 (k+s)(k+s+1), split into the telescoping difference 1/(k+s) - 1/(k+s+1)
    if (d == 2) {
        const Complex sq = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
        const Complex r1 = (-c[1] + sq) / (2.0 * c[2]);
        const Complex r2 = (-c[1] - sq) / (2.0 * c[2]);
        Complex s;
        if (std::abs(r1 - r2 - 1.0) <= kMatchTol * (1.0 + std::abs(r1)))
            s = -r1;
        else if (std::abs(r2 - r1 - 1.0) <= kMatchTol * (1.0 + std::abs(r2)))
            s = -r2;
        else
            unsupported(node, "denominator is not (k+s)^a or (k+s)(k+s+1)");
        const Complex f = num / c[2];
        return CatalogExpr::inverse_monomial(1, s, f) - CatalogExpr::inverse_monomial(1, s + 1.0, f);
    }
    unsupported(node, "denominator is not (k+s)^a or (k+s)(k+s+1)");
}

CatalogExpr int_pow(const CatalogExpr& a, long n, const SyntaxTree& node) {
    if (n == 0) return CatalogExpr::constant(1.0);
    if (n < 0) return divide(CatalogExpr::constant(1.0), int_pow(a, -n, node), node);
    CatalogExpr r = a;
    for (long j = 1; j < n; ++j) r = multiply(r, a, node);
    return r;
}

Complex pow_scalar(Complex base, Complex ex, const SyntaxTree& node) {
    base = principal(base);
    if (base == 0.0) {
        if (ex.imag() == 0.0 && ex.real() > 0.0) return 0.0;
        unsupported(node, "zero base raised to a nonpositive power");
    }
    if (ex.imag() == 0.0 && ex.real() == std::round(ex.real()) && std::fabs(ex.real()) <= 64.0)
        return pow_int(base, static_cast<int>(ex.real()));
    return std::pow(base, ex);
}

}  // namespace

CatalogExpr canonicalize(const SyntaxTree& t) {
    switch (t.kind) {
        case NodeKind::number: return CatalogExpr::constant(t.number);
        case NodeKind::constant: return CatalogExpr::constant(const_value(t.cname));
        case NodeKind::variable: return CatalogExpr::monomial(1);
        case NodeKind::negate: return -canonicalize(t.children[0]);
        case NodeKind::add: return canonicalize(t.children[0]) + canonicalize(t.children[1]);
        case NodeKind::sub: return canonicalize(t.children[0]) - canonicalize(t.children[1]);
        case NodeKind::mul:
            return multiply(canonicalize(t.children[0]), canonicalize(t.children[1]), t);
        case NodeKind::div:
            return divide(canonicalize(t.children[0]), canonicalize(t.children[1]), t);
        case NodeKind::pow: {
            const SyntaxTree& base = t.children[0];
            const SyntaxTree& ex = t.children[1];
            if (!contains_variable(ex)) {
                const Complex w = evaluate_tree(ex, 0.0);
                CatalogExpr a = canonicalize(base);
                if (a.is_constant())
                    return CatalogExpr::constant(pow_scalar(a.constant_value(), w, t));
                if (std::abs(w.imag()) > kIntTol ||
                    std::abs(w.real() - std::round(w.real())) > kIntTol)
                    unsupported(t, "non-integer power of a non-constant base");
                const long n = std::lround(w.real());
                if (std::labs(n) > 64) unsupported(t, "power exceeds the supported range");
                return int_pow(a, n, t);
            }
            CatalogExpr a = canonicalize(base);
            if (!a.is_constant()) unsupported(t, "variable exponent over a non-constant base");
            const Complex u = a.constant_value();
            if (u == 0.0) unsupported(t, "zero base with a variable exponent");
            const CatalogExpr e = canonicalize(ex);
            const auto lin = linear_parts(e);
            if (!lin) unsupported(t, "exponent is not linear in k");
            const auto [alpha, beta] = *lin;
            const Complex lnu = std::log(principal(u));  // (-1)^k == exp(pi*i*k)
            return CatalogExpr::exponential(alpha * lnu, std::exp(beta * lnu));
        }
        case NodeKind::call: {
            const CatalogExpr a = canonicalize(t.children[0]);
            switch (t.fn) {
                case CallName::exp: {
                    const auto lin = linear_parts(a);
                    if (!lin) unsupported(t, "exp argument is not linear in k");
                    const auto [alpha, beta] = *lin;
                    return CatalogExpr::exponential(alpha, std::exp(beta));
                }
                case CallName::ln: {
                    if (a.is_constant()) {
                        const Complex c = a.constant_value();
                        if (c == 0.0) unsupported(t, "logarithm of zero");
                        return CatalogExpr::constant(std::log(c));
                    }
                    const auto lin = linear_parts(a);
                    if (!lin || std::abs(lin->first - 1.0) > kIntTol)
                        unsupported(t, "logarithm argument must be k + shift");
                    return CatalogExpr::logarithm(lin->second);
                }
                case CallName::sin:
                case CallName::cos: {
                    const auto lin = linear_parts(a);
                    if (!lin) unsupported(t, "trigonometric argument is not linear in k");
                    const auto [alpha, beta] = *lin;
                    const Complex I(0.0, 1.0);
                    const Complex ep = std::exp(I * beta);
                    const Complex em = std::exp(-I * beta);
                    if (t.fn == CallName::cos)
                        return CatalogExpr::exponential(I * alpha, 0.5 * ep) +
                               CatalogExpr::exponential(-I * alpha, 0.5 * em);
                    return CatalogExpr::exponential(I * alpha, -0.5 * I * ep) +
                           CatalogExpr::exponential(-I * alpha, 0.5 * I * em);
                }
            }
            break;
        }
    }
    throw UnsupportedError("unhandled syntax node");
}

CatalogExpr parse_catalog(std::string_view src) { return canonicalize(parse(src)); }

// ---------------------------------------------------------------------------
// Rendering (inverse of parse_catalog up to canonical form)
// ---------------------------------------------------------------------------

namespace {

std::string render_complex(Complex c) {
    if (c.imag() == 0.0) return fmt_number(c.real());
    if (c.real() == 0.0) return fmt_number(c.imag()) + "i";
    std::string s = "(" + fmt_number(c.real());
    s += c.imag() < 0.0 ? "-" + fmt_number(-c.imag()) : "+" + fmt_number(c.imag());
    return s + "i)";
}

std::string shifted_base(Complex shift) {
    if (shift == 0.0) return "k";
    return "(k+" + render_complex(shift) + ")";
}

std::string render_term(const CatalogTerm& t) {
    const std::string c = render_complex(t.coeff);
    switch (t.basis.kind) {
        case BasisKind::constant: return c;
        case BasisKind::monomial:
            return c + "*k" + (t.basis.power > 1 ? "^" + std::to_string(t.basis.power) : "");
        case BasisKind::inverse_monomial:
            return c + "/" + shifted_base(t.shift) +
                   (t.basis.power > 1 ? "^" + std::to_string(t.basis.power) : "");
        case BasisKind::exponential:
            return c + "*exp(" + render_complex(t.basis.rate) + "*k)";
        case BasisKind::exp_times_x:
            return c + "*exp(" + render_complex(t.basis.rate) + "*k)*k";
        case BasisKind::logarithm:
            return c + "*ln(k+" + render_complex(t.shift) + ")";
    }
    return "0";
}

}  // namespace

std::string render_expression(const CatalogExpr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& t : e.terms()) {
        if (!out.empty()) out += " + ";
        out += render_term(t);
    }
    return out;
}

}  // namespace fracsum

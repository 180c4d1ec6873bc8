#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

// Arithmetic expressions in the bound variable k.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?                  (right-associative, binds
//                                                tighter than unary minus)
//   atom  := number | 'k' | constant | fn '(' expr ')' | '(' expr ')'
//
// Numbers are plain decimals with an optional imaginary suffix ("3i",
// "2.5i"); no scientific notation, no implicit multiplication. Constants:
// pi, e, gamma, i. Functions: exp, ln, sin, cos.
enum class NodeKind { number, constant, variable, negate, add, sub, mul, div, pow, call };
enum class ConstName { pi, e, gamma, i };
enum class CallName { exp, ln, sin, cos };

struct SyntaxTree {
    NodeKind kind = NodeKind::number;
    Complex number{};
    ConstName cname = ConstName::pi;
    CallName fn = CallName::exp;
    std::vector<SyntaxTree> children;
};

SyntaxTree parse(std::string_view src);  // throws ParseError with byte offset
std::string unparse(const SyntaxTree& t);
bool tree_equal(const SyntaxTree& a, const SyntaxTree& b);
bool contains_variable(const SyntaxTree& t);

// Direct tree evaluation at k (test oracle and bound parsing).
Complex evaluate_tree(const SyntaxTree& t, Complex k);

// Normalize a syntax tree into the catalog, or throw UnsupportedError naming
// the offending subtree. Recognized shapes: polynomials in k (expanded, total
// degree <= 16), c/(k+s)^a, c/((k+s)(k+s+1)) (split into its telescoping
// difference), u^(a*k+b) and exp(a*k+b) via the principal logarithm,
// c*exp(z*k)*(k+s), c*ln(k+s), sin/cos of linear arguments (rewritten as
// exponential pairs), and sums of all of the above.
CatalogExpr canonicalize(const SyntaxTree& t);

CatalogExpr parse_catalog(std::string_view src);

// Render a catalog expression back into the grammar (round-trips through
// parse + canonicalize).
std::string render_expression(const CatalogExpr& e);

}  // namespace fracsum

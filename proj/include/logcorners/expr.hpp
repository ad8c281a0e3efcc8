#pragma once

#include <memory>
#include <string>
#include <vector>

namespace logcorners {

/// Node of the expression grammar. Numbers keep their source text; every
/// other leaf is an identifier resolved later against a chart.
struct Expr {
  enum class Kind { kNumber, kIdent, kNeg, kAdd, kSub, kMul, kDiv, kPow, kWedge, kCall };
  Kind kind;
  std::string text;              // number text, identifier or function name
  int exponent = 0;              // for kPow
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t position = 0;      // offset in the source text

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_number(std::string text);
ExprPtr make_ident(std::string name);
ExprPtr make_unary(Expr::Kind kind, ExprPtr a);
ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, int exponent);
ExprPtr make_call(std::string fn, ExprPtr arg);

/// Functions accepted by the grammar.
const std::vector<std::string>& grammar_functions();

/// Parses the expression grammar; throws ParseError with the offending position.
ExprPtr parse_expr(const std::string& text);

/// Plain text in the grammar, with the minimum parentheses needed to parse back
/// to the same tree.
std::string render(const Expr& e);

/// LaTeX-like rendering for display.
std::string render_latex(const Expr& e);

}  // namespace logcorners

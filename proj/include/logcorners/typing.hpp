#pragma once

#include <string>
#include <vector>

#include "logcorners/expr.hpp"
#include "logcorners/integration.hpp"

namespace logcorners {

/// Chart read off identifier names: theta/phi -> angular, t/t_* -> phantom,
/// r/s/u/v/rho -> basic, x/y -> free (with numeric or underscore suffixes).
/// Everything else is a positive parameter.
Chart infer_chart(const std::vector<ExprPtr>& exprs);
Role infer_role(const std::string& name);

/// Typing pass. Throws TypeError with a node path such as "$.1.0".
LogForm to_form(const Expr& e, const Chart& chart);
LogFunction to_function(const Expr& e, const Chart& chart);
MonoidElement to_monoid(const Expr& e, const Chart& chart);
Scalar to_scalar(const Expr& e);

/// Angle "±phi + k*pi/2" in the source chart (phi may be absent).
AngleAssign to_angle_assign(const Expr& e, const Chart& source);

/// Assignments "r=u^2; theta=-phi + pi/2; t=u*t2; x=x+1", one per target
/// coordinate; a basic value suffixed "@0" is collapsed (sent to the
/// boundary). Target coordinates left out map to the source coordinate of the
/// same name.
WeakMorphism parse_morphism(const std::string& text, const Chart& source, const Chart& target);

/// Convenience wrappers over parse_expr.
LogForm parse_form(const std::string& text, const Chart& chart);
LogFunction parse_function(const std::string& text, const Chart& chart);
MonoidElement parse_monoid(const std::string& text, const Chart& chart);
Scalar parse_scalar(const std::string& text);

/// "c*d/dr@0" (several terms joined by '+', then optional ", x=v, theta=v,
/// t=v") or "-c*d/dr@a" for the far end of an interval.
struct ParsedBasepoint {
  Basepoint at_zero;
  bool at_end = false;
  std::string end_coordinate;
  MonoidElement end_value;
};
ParsedBasepoint parse_basepoint(const std::string& text, const Chart& chart);

/// "g(r)*r^j d/dt", several terms joined by '+' or ';'.
Scale parse_scale(const std::string& text, const Chart& chart);

/// Value of f at the far endpoint r = value (an ordinary limit).
Scalar value_at_end(const LogFunction& f, const std::string& r, const MonoidElement& value);

/// Splits at separators that sit outside parentheses.
std::vector<std::string> split_top_level(const std::string& text, const std::string& separators);
std::string trim(const std::string& s);

}  // namespace logcorners

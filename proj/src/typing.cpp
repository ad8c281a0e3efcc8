#include "logcorners/typing.hpp"

#include <optional>
#include <regex>
#include <set>

#include "logcorners/error.hpp"
#include "logcorners/regularization_check.hpp"

namespace logcorners {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && separators.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

Role infer_role(const std::string& name) {
  static const std::regex angular("(theta|phi|psi)(_\\w+|\\d+)?");
  static const std::regex phantom("t(_\\w+|\\d+)?");
  static const std::regex basic("(r|s|u|v|rho)(_\\w+|\\d+)?");
  static const std::regex free("(x|y|z)(_\\w+|\\d+)?");
  if (std::regex_match(name, angular)) return Role::kAngular;
  if (std::regex_match(name, phantom)) return Role::kPhantom;
  if (std::regex_match(name, basic)) return Role::kBasic;
  if (std::regex_match(name, free)) return Role::kFree;
  return Role::kNone;
}

namespace {

void collect_idents(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::kIdent) out.push_back(e.text);
  for (const auto& a : e.args) collect_idents(*a, out);
}

}  // namespace

Chart infer_chart(const std::vector<ExprPtr>& exprs) {
  std::vector<std::string> names;
  for (const auto& e : exprs) collect_idents(*e, names);
  Chart c;
  std::set<std::string> seen;
  for (std::string n : names) {
    if (infer_role(n) == Role::kNone && n.size() > 1 && n[0] == 'd' && infer_role(n.substr(1)) != Role::kNone)
      n = n.substr(1);
    Role r = infer_role(n);
    if (r == Role::kNone || !seen.insert(n).second) continue;
    switch (r) {
      case Role::kFree: c.free.push_back(n); break;
      case Role::kBasic: c.basic.push_back(n); break;
      case Role::kPhantom: c.phantom.push_back(n); break;
      case Role::kAngular: c.angular.push_back(n); break;
      default: break;
    }
  }
  return c;
}

namespace {

struct Angle {
  std::map<std::string, mpq_class> theta;
  mpq_class pi = 0;

  Angle operator-() const {
    Angle a = *this;
    for (auto& [n, k] : a.theta) k = -k;
    a.pi = -a.pi;
    return a;
  }
  Angle operator+(const Angle& o) const {
    Angle a = *this;
    for (const auto& [n, k] : o.theta) {
      a.theta[n] += k;
      if (a.theta[n] == 0) a.theta.erase(n);
    }
    a.pi += o.pi;
    return a;
  }
  Angle scaled(const mpq_class& c) const {
    Angle a;
    if (c == 0) return a;
    for (const auto& [n, k] : theta) a.theta[n] = k * c;
    a.pi = pi * c;
    return a;
  }
};

struct Value {
  std::optional<MonoidElement> monoid;
  std::optional<LogForm> form;
  std::optional<Angle> angle;
};

bool degree_zero(const LogForm& w) {
  for (const auto& [b, t] : w.terms())
    if (!b.empty()) return false;
  return true;
}

bool is_real(const FourierPoly& q) {
  auto id = [](const std::string& n) { return n; };
  for (const auto& [k, c] : q.terms()) {
    FourierKey mirror = k;
    for (auto& [n, e] : mirror.fourier) e = -e;
    auto it = q.terms().find(mirror);
    if (it == q.terms().end() || !(it->second.conjugated(id) == c)) return false;
  }
  return true;
}

void erase_zeros(Exponents& e) { std::erase_if(e, [](const auto& kv) { return kv.second == 0; }); }

std::optional<MonoidElement> quotient(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement m = a;
  m.c = a.c / b.c;
  for (const auto& [n, k] : b.sigma) m.sigma[n] -= k;
  for (const auto& [n, k] : b.r) m.r[n] -= k;
  for (const auto& [n, k] : b.t) m.t[n] -= k;
  m.q = a.q - b.q;
  erase_zeros(m.sigma);
  erase_zeros(m.r);
  erase_zeros(m.t);
  for (const auto& [n, k] : m.r)
    if (k < 0) return std::nullopt;
  for (const auto& [n, k] : m.t)
    if (k < 0) return std::nullopt;
  return m;
}

mpq_class parse_number(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpz_class den = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
  mpq_class q(mpz_class(digits), den);
  q.canonicalize();
  return q;
}

Coefficient cis(const Angle& a) {
  Coefficient out(1);
  for (const auto& [n, k] : a.theta) {
    if (k.get_den() != 1) throw DomainError("frequency of '" + n + "' must be an integer");
    out *= Coefficient(FourierPoly::wave(n, static_cast<int>(k.get_num().get_si())));
  }
  mpq_class twice = 2 * a.pi;
  if (twice.get_den() != 1) throw DomainError("constant angle must be a multiple of pi/2");
  long quarter = ((twice.get_num().get_si() % 4) + 4) % 4;
  static const GaussRational units[4] = {GaussRational(1), GaussRational(0, 1), GaussRational(-1),
                                         GaussRational(0, -1)};
  return out.scaled(Scalar(units[quarter]));
}

class Typer {
 public:
  explicit Typer(const Chart& chart) : chart_(chart) {}

  Value eval(const Expr& e, const std::string& path) {
    switch (e.kind) {
      case Expr::Kind::kNumber: return number(e);
      case Expr::Kind::kIdent: return ident(e, path);
      case Expr::Kind::kCall: return call(e, path);
      case Expr::Kind::kNeg: {
        Value a = eval(*e.args[0], path + ".0");
        Value out;
        if (a.form) out.form = -*a.form;
        if (a.angle) out.angle = -*a.angle;
        return out;
      }
      case Expr::Kind::kAdd:
      case Expr::Kind::kSub: {
        Value a = eval(*e.args[0], path + ".0");
        Value b = eval(*e.args[1], path + ".1");
        bool add = e.kind == Expr::Kind::kAdd;
        Value out;
        if (a.angle && b.angle) out.angle = add ? *a.angle + *b.angle : *a.angle + -*b.angle;
        if (a.form && b.form) out.form = add ? *a.form + *b.form : *a.form - *b.form;
        if (!out.angle && !out.form) need_form(a.form ? b : a, path + (a.form ? ".1" : ".0"));
        return out;
      }
      case Expr::Kind::kMul: return mul(e, path);
      case Expr::Kind::kDiv: return div(e, path);
      case Expr::Kind::kPow: return pow(e, path);
      case Expr::Kind::kWedge: {
        Value a = eval(*e.args[0], path + ".0");
        Value b = eval(*e.args[1], path + ".1");
        return {std::nullopt, wedge(need_form(a, path + ".0"), need_form(b, path + ".1")), std::nullopt};
      }
    }
    return {};
  }

  const LogForm& need_form(const Value& v, const std::string& path) const {
    if (v.form) return *v.form;
    if (v.angle) throw TypeError("angular coordinate used as a function; use cis, cos, sin or d(...)", path);
    throw TypeError("expression has no value as a function or form", path);
  }

 private:
  Value constant(const Scalar& s) const { return {std::nullopt, LogForm(LogFunction(chart_, Coefficient(s))), std::nullopt}; }

  Value number(const Expr& e) const {
    mpq_class q = parse_number(e.text);
    Value v = constant(Scalar(RationalFunction(GaussRational(q))));
    if (q > 0) v.monoid = MonoidElement::constant(q);
    if (q == 0) v.angle = Angle{};
    return v;
  }

  Value coordinate(const std::string& n) const {
    switch (chart_.role(n)) {
      case Role::kFree: return {std::nullopt, LogForm(LogFunction(chart_, Coefficient::variable(n))), std::nullopt};
      case Role::kBasic:
        return {MonoidElement::basic(n), LogForm(LogFunction(chart_, Coefficient::variable(n))), std::nullopt};
      case Role::kPhantom: return {MonoidElement::phantom(n), LogForm(chart_), std::nullopt};
      case Role::kAngular: return {std::nullopt, std::nullopt, Angle{{{n, 1}}, 0}};
      default: return {};
    }
  }

  Value differential(const std::string& n) const {
    switch (chart_.role(n)) {
      case Role::kFree:
      case Role::kAngular: return {std::nullopt, LogForm::basis(chart_, n), std::nullopt};
      case Role::kBasic: return {std::nullopt, d(LogFunction(chart_, Coefficient::variable(n))), std::nullopt};
      default: return {std::nullopt, LogForm(chart_), std::nullopt};
    }
  }

  Value ident(const Expr& e, const std::string&) const {
    const std::string& n = e.text;
    if (n == "i") return constant(Scalar::i());
    if (n == "pi") {
      Value v = constant(Scalar::pi());
      v.angle = Angle{{}, 1};
      return v;
    }
    if (chart_.contains(n)) return coordinate(n);
    if (n.size() > 1 && n[0] == 'd' && chart_.contains(n.substr(1))) return differential(n.substr(1));
    Value v = constant(Scalar::parameter(n));
    v.monoid = MonoidElement::parameter(n);
    return v;
  }

  LogFunction function_of(const Value& v, const std::string& path) const {
    const LogForm& w = need_form(v, path);
    if (!degree_zero(w)) throw TypeError("expected a function, got a form of degree " + std::to_string(w.degree()), path);
    return w.coefficient({});
  }

  static std::optional<mpq_class> rational(const Value& v) {
    if (!v.form || !degree_zero(*v.form)) return std::nullopt;
    LogFunction f = v.form->coefficient({});
    if (!f.is_constant()) return std::nullopt;
    Scalar s = f.as_constant();
    if (!s.is_number()) return std::nullopt;
    GaussRational g = s.as_number();
    if (!g.is_real()) return std::nullopt;
    return g.re();
  }

  Value call(const Expr& e, const std::string& path) {
    std::string sub = path + ".0";
    Value a = eval(*e.args[0], sub);
    const std::string& fn = e.text;
    if (fn == "log" || fn == "dlog") {
      if (!a.monoid) throw TypeError(fn + " of a non-monoid expression '" + render(*e.args[0]) + "'", sub);
      LogFunction l = log_of(chart_, *a.monoid);
      return {std::nullopt, fn == "log" ? LogForm(l) : d(l), std::nullopt};
    }
    if (fn == "d") {
      if (a.angle && !a.form) {
        LogForm w(chart_);
        for (const auto& [n, k] : a.angle->theta)
          w += LogForm::basis(chart_, n).scaled(Scalar(RationalFunction(GaussRational(k))));
        return {std::nullopt, w, std::nullopt};
      }
      return {std::nullopt, d(need_form(a, sub)), std::nullopt};
    }
    if (fn == "exp") {
      LogFunction f = function_of(a, sub);
      if (f.is_zero()) return {MonoidElement::constant(1), LogForm(LogFunction(chart_, Coefficient(1))), std::nullopt};
      if (f.terms().size() != 1 || !f.terms().begin()->first.empty() || !f.terms().begin()->second.is_polynomial())
        throw TypeError("exp of an expression that is not a polynomial in the coordinates", sub);
      FourierPoly q = f.terms().begin()->second.as_polynomial();
      Scalar c = q.constant_term();
      FourierPoly rest = q.without_constant();
      std::optional<MonoidElement> m0 = c.is_zero() ? MonoidElement::constant(1) : exp_of_log(c);
      if (!m0) throw DomainError("exp(" + c.to_string() + ") has no exact representation");
      Value out{std::nullopt, LogForm(LogFunction(chart_, m0->alpha() * Coefficient::exp(rest))), std::nullopt};
      if (is_real(rest)) out.monoid = *m0 * MonoidElement::exponential(rest);
      return out;
    }
    if (fn == "cis" || fn == "cos" || fn == "sin") {
      if (!a.angle) throw TypeError(fn + " expects an angle such as k*theta + pi/2", sub);
      Coefficient plus = cis(*a.angle);
      Coefficient c = plus;
      if (fn == "cos") c = (plus + cis(-*a.angle)).scaled(Scalar::rational(1, 2));
      if (fn == "sin") c = (plus - cis(-*a.angle)).scaled(Scalar(GaussRational(0, mpq_class(-1, 2))));
      return {std::nullopt, LogForm(LogFunction(chart_, c)), std::nullopt};
    }
    throw TypeError("unknown function '" + fn + "'", path);
  }

  LogForm product(const LogForm& a, const LogForm& b, const std::string& path) const {
    if (degree_zero(a)) return b.times(a.coefficient({}));
    if (degree_zero(b)) return a.times(b.coefficient({}));
    throw TypeError("product of two forms of positive degree; use ^wedge", path);
  }

  Value mul(const Expr& e, const std::string& path) {
    Value a = eval(*e.args[0], path + ".0");
    Value b = eval(*e.args[1], path + ".1");
    Value out;
    if (a.monoid && b.monoid) out.monoid = *a.monoid * *b.monoid;
    if (a.angle && !b.angle) {
      if (auto k = rational(b)) out.angle = a.angle->scaled(*k);
    } else if (b.angle && !a.angle) {
      if (auto k = rational(a)) out.angle = b.angle->scaled(*k);
    } else if (a.angle && b.angle) {
      // pi*pi and the like: only meaningful as scalars
      if (auto k = rational(a)) out.angle = b.angle->scaled(*k);
      else if (auto k2 = rational(b)) out.angle = a.angle->scaled(*k2);
    }
    if (a.form && b.form) out.form = product(*a.form, *b.form, path);
    if (!out.form && !out.angle) need_form(a.form ? b : a, path + (a.form ? ".1" : ".0"));
    return out;
  }

  Value div(const Expr& e, const std::string& path) {
    Value a = eval(*e.args[0], path + ".0");
    Value b = eval(*e.args[1], path + ".1");
    Value out;
    if (a.angle) {
      if (auto k = rational(b); k && *k != 0) out.angle = a.angle->scaled(1 / *k);
    }
    if (a.monoid && b.monoid) out.monoid = quotient(*a.monoid, *b.monoid);
    if (a.form) {
      if (out.monoid && !out.monoid->is_phantom()) {
        out.form = LogForm(LogFunction(chart_, out.monoid->alpha()));
      } else if (b.monoid && b.monoid->is_basic() && b.monoid->r.empty()) {
        out.form = a.form->times(LogFunction(chart_, b.monoid->inverse().alpha()));
      } else if (b.form && degree_zero(*b.form) && b.form->coefficient({}).is_constant() &&
                 b.form->coefficient({}).as_constant().is_rational_function() &&
                 !b.form->coefficient({}).as_constant().is_zero()) {
        out.form = a.form->scaled(Scalar(1).divided_by(b.form->coefficient({}).as_constant()));
      } else if (!out.monoid || !out.monoid->is_phantom()) {
        throw TypeError("division by '" + render(*e.args[1]) + "', which is not invertible in the coefficient ring",
                        path + ".1");
      }
      // phantom quotients keep alpha = 0
      if (!out.form) out.form = LogForm(chart_);
    }
    if (!out.form && !out.angle) need_form(a, path + ".0");
    return out;
  }

  Value pow(const Expr& e, const std::string& path) {
    Value a = eval(*e.args[0], path + ".0");
    int n = e.exponent;
    Value out;
    if (a.monoid) {
      if (n >= 0) out.monoid = a.monoid->pow(n);
      else if (a.monoid->r.empty() && a.monoid->t.empty()) out.monoid = a.monoid->inverse().pow(-n);
    }
    if (a.angle && n == 1) out.angle = a.angle;
    if (a.form) {
      if (n == 1) {
        out.form = a.form;
      } else if (n >= 0) {
        out.form = LogForm(function_of(a, path + ".0").pow(n));
      } else if (out.monoid) {
        out.form = LogForm(LogFunction(chart_, out.monoid->alpha()));
      } else {
        LogFunction f = function_of(a, path + ".0");
        if (!f.is_constant() || !f.as_constant().is_rational_function() || f.as_constant().is_zero())
          throw TypeError("negative power of a non-invertible expression", path);
        out.form = LogForm(LogFunction(chart_, Coefficient(f.as_constant().pow(n))));
      }
    }
    if (!out.form && !out.angle) need_form(a, path + ".0");
    return out;
  }

  const Chart& chart_;
};

}  // namespace

LogForm to_form(const Expr& e, const Chart& chart) {
  Typer t(chart);
  Value v = t.eval(e, "$");
  return t.need_form(v, "$");
}

LogFunction to_function(const Expr& e, const Chart& chart) {
  LogForm w = to_form(e, chart);
  if (!degree_zero(w)) throw TypeError("expected a function, got a form of degree " + std::to_string(w.degree()), "$");
  return w.coefficient({});
}

MonoidElement to_monoid(const Expr& e, const Chart& chart) {
  Typer t(chart);
  Value v = t.eval(e, "$");
  if (!v.monoid) throw TypeError("'" + render(e) + "' is not a positive monoid element", "$");
  return *v.monoid;
}

AngleAssign to_angle_assign(const Expr& e, const Chart& source) {
  Typer t(source);
  Value v = t.eval(e, "$");
  if (!v.angle) throw TypeError("'" + render(e) + "' is not an angle", "$");
  AngleAssign out;
  if (v.angle->theta.size() > 1) throw DomainError("angle '" + render(e) + "' mixes several angular coordinates");
  if (v.angle->theta.size() == 1) {
    const auto& [n, k] = *v.angle->theta.begin();
    if (k != 1 && k != -1) throw DomainError("angle '" + render(e) + "' must have coefficient +1 or -1");
    out.source = n;
    out.sign = k > 0 ? 1 : -1;
  }
  mpq_class twice = 2 * v.angle->pi;
  if (twice.get_den() != 1) throw DomainError("angle offset must be a multiple of pi/2");
  out.quarter_turns = static_cast<int>(((twice.get_num().get_si() % 4) + 4) % 4);
  return out;
}

WeakMorphism parse_morphism(const std::string& text, const Chart& source, const Chart& target) {
  WeakMorphism f{source, target, {}, {}, {}, {}};
  std::set<std::string> assigned;
  for (const auto& raw : split_top_level(text, ";,")) {
    if (trim(raw).empty()) continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + trim(raw) + "'", 0);
    std::string n = trim(raw.substr(0, eq));
    std::string val = trim(raw.substr(eq + 1));
    if (!assigned.insert(n).second) throw ParseError("coordinate '" + n + "' assigned twice", eq);
    switch (target.role(n)) {
      case Role::kBasic: {
        bool collapsed = val.size() > 2 && val.compare(val.size() - 2, 2, "@0") == 0;
        if (collapsed) val = trim(val.substr(0, val.size() - 2));
        f.r[n] = {parse_monoid(val, source), collapsed};
        break;
      }
      case Role::kPhantom: f.t[n] = parse_monoid(val, source); break;
      case Role::kFree: {
        LogFunction g = parse_function(val, source);
        if (g.terms().size() > 1 || (!g.is_zero() && !g.terms().begin()->first.empty()))
          throw DomainError("value of '" + n + "' must not involve logarithms");
        f.x[n] = g.is_zero() ? Coefficient() : g.terms().begin()->second;
        break;
      }
      case Role::kAngular: f.theta[n] = to_angle_assign(*parse_expr(val), source); break;
      default: throw DomainError("'" + n + "' is not a coordinate of the target chart");
    }
  }
  for (const auto& n : target.coordinates()) {
    if (assigned.count(n)) continue;
    Role r = target.role(n);
    if (source.role(n) != r) throw DomainError("no assignment for target coordinate '" + n + "'");
    switch (r) {
      case Role::kBasic: f.r[n] = {MonoidElement::basic(n), false}; break;
      case Role::kPhantom: f.t[n] = MonoidElement::phantom(n); break;
      case Role::kFree: f.x[n] = Coefficient::variable(n); break;
      case Role::kAngular: f.theta[n] = {1, n, 0}; break;
      default: break;
    }
  }
  f.validate();
  return f;
}

Scalar to_scalar(const Expr& e) {
  LogFunction f = to_function(e, Chart::point());
  return f.is_zero() ? Scalar() : f.as_constant();
}

LogForm parse_form(const std::string& text, const Chart& chart) { return to_form(*parse_expr(text), chart); }
LogFunction parse_function(const std::string& text, const Chart& chart) {
  return to_function(*parse_expr(text), chart);
}
MonoidElement parse_monoid(const std::string& text, const Chart& chart) { return to_monoid(*parse_expr(text), chart); }
Scalar parse_scalar(const std::string& text) { return to_scalar(*parse_expr(text)); }

namespace {

struct VectorTerm {
  int sign = 1;
  std::string coefficient;
  std::string coordinate;
};

VectorTerm split_vector_term(const std::string& raw, const std::string& whole) {
  std::string s = trim(raw);
  auto k = s.rfind("d/d");
  if (k == std::string::npos) throw ParseError("expected a tangent vector 'c*d/dr' in '" + whole + "'", 0);
  VectorTerm v;
  v.coordinate = trim(s.substr(k + 3));
  std::string c = trim(s.substr(0, k));
  if (!c.empty() && c.back() == '*') c = trim(c.substr(0, c.size() - 1));
  if (!c.empty() && c.front() == '-') {
    v.sign = -1;
    c = trim(c.substr(1));
  }
  v.coefficient = c.empty() ? "1" : c;
  if (v.coordinate.empty()) throw ParseError("missing coordinate after d/d in '" + whole + "'", k + 3);
  return v;
}

AngleAssign parse_angle_value(const std::string& text) {
  Scalar s = parse_scalar(text);
  if (s.is_zero()) return {};
  Scalar ratio;
  for (const auto& [m, c] : s.terms()) {
    if (m.pi_degree != 1 || !m.logs.empty() || s.terms().size() != 1 || !c.is_constant())
      throw DomainError("angle '" + text + "' must be a rational multiple of pi");
    GaussRational g = c.num().constant_value();
    mpq_class twice = 2 * g.re();
    if (!g.is_real() || twice.get_den() != 1) throw DomainError("angle '" + text + "' must be a multiple of pi/2");
    return {1, std::nullopt, static_cast<int>(((twice.get_num().get_si() % 4) + 4) % 4)};
  }
  return {};
}

}  // namespace

ParsedBasepoint parse_basepoint(const std::string& text, const Chart& chart) {
  auto parts = split_top_level(text, ",");
  ParsedBasepoint out;
  const std::string& head = parts[0];
  auto at = head.find('@');
  if (at == std::string::npos) throw ParseError("basepoint needs '@0' or '@<endpoint>'", head.size());
  std::string where = trim(head.substr(at + 1));
  auto terms = split_top_level(head.substr(0, at), "+");
  Chart pt = Chart::point();
  if (where == "0") {
    for (const auto& raw : terms) {
      VectorTerm v = split_vector_term(raw, text);
      if (v.sign < 0) throw DomainError("tangent vector at 0 must point inward (positive coefficient)");
      MonoidElement c = parse_monoid(v.coefficient, pt);
      switch (chart.role(v.coordinate)) {
        case Role::kBasic: out.at_zero.r[v.coordinate] = c; break;
        case Role::kPhantom: out.at_zero.t[v.coordinate] = c; break;
        default: throw DomainError("'" + v.coordinate + "' is not a basic or phantom coordinate of the chart");
      }
    }
  } else {
    if (terms.size() != 1) throw DomainError("a far-end basepoint takes a single tangent vector");
    VectorTerm v = split_vector_term(terms[0], text);
    if (v.sign > 0) throw DomainError("tangent vector at the far end must point inward (write -c*d/dr@a)");
    if (chart.role(v.coordinate) != Role::kBasic) throw DomainError("'" + v.coordinate + "' is not a basic coordinate");
    out.at_end = true;
    out.end_coordinate = v.coordinate;
    out.end_value = parse_monoid(where, pt);
    auto b = chart.bounds.find(v.coordinate);
    if (b != chart.bounds.end() && !(b->second == out.end_value))
      throw DomainError("endpoint " + where + " does not match the interval bound " + b->second.to_string());
  }
  for (std::size_t k = 1; k < parts.size(); ++k) {
    auto eq = parts[k].find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + parts[k] + "'", 0);
    std::string n = trim(parts[k].substr(0, eq));
    std::string val = trim(parts[k].substr(eq + 1));
    switch (chart.role(n)) {
      case Role::kFree: out.at_zero.x[n] = parse_scalar(val); break;
      case Role::kAngular: out.at_zero.theta[n] = parse_angle_value(val); break;
      case Role::kPhantom: out.at_zero.t[n] = parse_monoid(val, pt); break;
      case Role::kBasic: out.at_zero.r[n] = parse_monoid(val, pt); break;
      default: throw DomainError("'" + n + "' is not a coordinate of the chart");
    }
  }
  return out;
}

Scale parse_scale(const std::string& text, const Chart& chart) {
  Scale s;
  for (const auto& raw : split_top_level(text, "+;")) {
    if (trim(raw).empty()) continue;
    VectorTerm v = split_vector_term(raw, text);
    if (v.sign < 0) throw DomainError("scale must be positive");
    if (chart.role(v.coordinate) != Role::kPhantom)
      throw DomainError("'" + v.coordinate + "' is not a phantom coordinate of the chart");
    s[v.coordinate] = parse_monoid(v.coefficient, chart);
  }
  return s;
}

Scalar value_at_end(const LogFunction& f, const std::string& r, const MonoidElement& value) {
  const Chart& chart = f.chart();
  if (chart.role(r) != Role::kBasic) throw DomainError("'" + r + "' is not a basic coordinate");
  WeakMorphism m = identity(chart);
  Chart src = chart;
  std::erase(src.basic, r);
  src.bounds.erase(r);
  m.source = src;
  m.r.erase(r);
  m.r[r] = {value, false};
  LogFunction g = pullback(m, f);
  if (g.is_zero()) return {};
  if (!g.is_constant()) throw DomainError("value at the endpoint still depends on other coordinates");
  return g.as_constant();
}

Chart parse_chart(const std::string& text) {
  std::string s = trim(text);
  Chart c;
  if (s == "pt" || s.empty()) return c;
  std::map<std::string, int> used;
  auto fresh = [&](const std::string& base) {
    int k = used[base]++;
    return k == 0 ? base : base + std::to_string(k + 1);
  };
  std::size_t offset = 0;
  for (const auto& raw : split_top_level(s, "*")) {
    std::string f = trim(raw);
    std::string name, kind = f;
    auto colon = f.find(':');
    if (colon != std::string::npos) {
      name = trim(f.substr(0, colon));
      kind = trim(f.substr(colon + 1));
      if (!std::regex_match(name, std::regex("[A-Za-z_]\\w*"))) throw ParseError("bad coordinate name '" + name + "'", offset);
    }
    if (kind == "R") {
      c.free.push_back(name.empty() ? fresh("x") : name);
    } else if (kind == "H") {
      c.basic.push_back(name.empty() ? fresh("r") : name);
    } else if (kind == "E") {
      c.phantom.push_back(name.empty() ? fresh("t") : name);
    } else if (kind == "S1") {
      c.angular.push_back(name.empty() ? fresh("theta") : name);
    } else if ((kind.rfind("I(", 0) == 0 && kind.back() == ')') || (kind.front() == '[' && kind.back() == ']')) {
      std::string inner = kind.substr(kind.front() == '[' ? 1 : 2);
      inner.pop_back();
      auto comma = inner.find(',');
      if (comma == std::string::npos || trim(inner.substr(0, comma)) != "0")
        throw ParseError("interval must be written I(0,a)", offset);
      std::string n = name.empty() ? fresh("r") : name;
      MonoidElement b = parse_monoid(trim(inner.substr(comma + 1)), Chart::point());
      if (!b.is_constant()) throw DomainError("interval bound must be a positive constant");
      c.basic.push_back(n);
      c.bounds[n] = b;
    } else {
      throw ParseError("unknown chart factor '" + f + "' (use R, H, I(0,a), E or S1)", offset);
    }
    offset += raw.size() + 1;
  }
  c.validate();
  return c;
}

}  // namespace logcorners

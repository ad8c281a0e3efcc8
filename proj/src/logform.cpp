#include "logcorners/logform.hpp"

#include <algorithm>
#include <cmath>

#include "logcorners/error.hpp"

namespace logcorners {

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw DomainError("chart mismatch: " + a.to_string() + " vs " + b.to_string());
}

namespace {

void add_term(LogTerms& terms, const Exponents& logs, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(logs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LogTerms multiply(const LogTerms& a, const LogTerms& b) {
  LogTerms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) add_term(out, add_exponents(la, lb), ca * cb);
  return out;
}

std::string log_factor(const std::string& name, int k) {
  std::string s = "log(" + name + ")";
  return k == 1 ? s : s + "^" + std::to_string(k);
}

std::string basis_factor(const Chart& chart, const std::string& name) {
  switch (chart.role(name)) {
    case Role::kBasic:
    case Role::kPhantom: return "dlog(" + name + ")";
    default: return "d(" + name + ")";
  }
}

// Renders sum of coefficient * logs * suffix, with the usual sign folding.
void render_terms(const LogTerms& terms, const std::string& suffix, std::string& out) {
  for (const auto& [logs, c] : terms) {
    std::string factors;
    for (const auto& [n, k] : logs) factors += (factors.empty() ? "" : "*") + log_factor(n, k);
    if (!suffix.empty()) factors += (factors.empty() ? "" : "*") + suffix;
    bool compound = false;
    std::string cs = c.to_string(&compound);
    bool negative = false;
    if (!compound && cs.front() == '-') {
      negative = true;
      cs = cs.substr(1);
    } else if (compound && c.terms().size() == 1 && c.terms().begin()->second.terms().size() == 1 &&
               cs.front() == '-') {
      negative = true;
      cs = cs.substr(1);
      compound = false;
    }
    std::string body;
    if (factors.empty()) {
      body = compound ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      body = factors;
    } else {
      body = (compound ? "(" + cs + ")" : cs) + "*" + factors;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
}

}  // namespace

// ---- LogFunction ----

LogFunction::LogFunction(Chart chart, const Coefficient& c) : chart_(std::move(chart)) { add({}, c); }

LogFunction::LogFunction(Chart chart, LogTerms terms) : chart_(std::move(chart)) {
  for (const auto& [l, c] : terms) add(l, c);
}

LogFunction LogFunction::log_coordinate(const Chart& chart, const std::string& name) {
  Role role = chart.role(name);
  if (role != Role::kBasic && role != Role::kPhantom)
    throw DomainError("log(" + name + ") needs a basic or phantom coordinate");
  LogFunction f(chart);
  f.add({{name, 1}}, 1);
  return f;
}

void LogFunction::add(const Exponents& logs, const Coefficient& c) {
  for (const auto& [n, k] : logs) {
    Role role = chart_.role(n);
    if (k < 0 || (role != Role::kBasic && role != Role::kPhantom))
      throw DomainError("invalid log factor log(" + n + ")^" + std::to_string(k));
  }
  add_term(terms_, logs, c);
}

bool LogFunction::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_constant());
}

Scalar LogFunction::as_constant() const {
  if (!is_constant()) throw DomainError("function " + to_string() + " is not constant");
  return terms_.empty() ? Scalar() : terms_.begin()->second.as_constant();
}

int LogFunction::log_degree(const std::string& name) const {
  int d = 0;
  for (const auto& [l, _] : terms_)
    if (auto it = l.find(name); it != l.end()) d = std::max(d, it->second);
  return d;
}

bool LogFunction::has_phantom_logs() const {
  for (const auto& [l, _] : terms_)
    for (const auto& [n, k] : l)
      if (chart_.role(n) == Role::kPhantom) return true;
  return false;
}

LogFunction LogFunction::operator-() const {
  LogFunction f = *this;
  for (auto& [_, c] : f.terms_) c = -c;
  return f;
}

LogFunction& LogFunction::operator+=(const LogFunction& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [l, c] : o.terms_) add_term(terms_, l, c);
  return *this;
}

LogFunction& LogFunction::operator-=(const LogFunction& o) { return *this += -o; }

LogFunction operator*(const LogFunction& a, const LogFunction& b) {
  require_same_chart(a.chart_, b.chart_);
  LogFunction f(a.chart_);
  f.terms_ = multiply(a.terms_, b.terms_);
  return f;
}

LogFunction LogFunction::scaled(const Scalar& c) const {
  LogFunction f(chart_);
  for (const auto& [l, v] : terms_) add_term(f.terms_, l, v.scaled(c));
  return f;
}

LogFunction LogFunction::times(const Coefficient& c) const {
  LogFunction f(chart_);
  for (const auto& [l, v] : terms_) add_term(f.terms_, l, v * c);
  return f;
}

LogFunction LogFunction::pow(int n) const {
  if (n < 0) throw DomainError("negative power of a log function");
  LogFunction r(chart_, Coefficient(1));
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::complex<double> LogFunction::eval(const Point& coords, const Point& params) const {
  std::complex<double> sum = 0;
  for (const auto& [l, c] : terms_) {
    std::complex<double> v = c.eval(coords, params);
    for (const auto& [n, k] : l) {
      if (chart_.role(n) == Role::kPhantom) throw DomainError("log(" + n + ") of a phantom has no numeric value");
      auto it = coords.find(n);
      if (it == coords.end()) throw DomainError("no value assigned to coordinate '" + n + "'");
      if (!(it->second > 0)) throw DomainError("point is not interior: " + n + " = " + std::to_string(it->second));
      v *= std::pow(std::log(it->second), k);
    }
    sum += v;
  }
  return sum;
}

std::string LogFunction::to_string() const {
  std::string out;
  render_terms(terms_, "", out);
  return out.empty() ? "0" : out;
}

// ---- LogForm ----

int canonical_basis(const Chart& chart, Basis& b) {
  auto coords = chart.coordinates();
  auto index = [&](const std::string& n) {
    auto it = std::find(coords.begin(), coords.end(), n);
    if (it == coords.end()) throw DomainError("'" + n + "' is not a coordinate of " + chart.to_string());
    return it - coords.begin();
  };
  std::vector<std::pair<long, std::string>> keyed;
  for (const auto& n : b) keyed.emplace_back(index(n), n);
  int sign = 1;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    for (std::size_t j = i + 1; j < keyed.size(); ++j) {
      if (keyed[i].first == keyed[j].first) return 0;
      if (keyed[i].first > keyed[j].first) sign = -sign;
    }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) b[i] = keyed[i].second;
  return sign;
}

LogForm::LogForm(const LogFunction& f) : chart_(f.chart()) {
  if (!f.is_zero()) terms_.emplace(Basis{}, f.terms());
}

LogForm LogForm::basis(const Chart& chart, const std::string& name) {
  if (!chart.contains(name)) throw DomainError("'" + name + "' is not a coordinate of " + chart.to_string());
  LogForm w(chart);
  w.add({name}, {}, 1);
  return w;
}

LogForm LogForm::from_terms(Chart chart, Terms terms) {
  LogForm w(std::move(chart));
  for (const auto& [b, lt] : terms)
    for (const auto& [l, c] : lt) w.add(b, l, c);
  return w;
}

void LogForm::add(const Basis& b, const Exponents& logs, const Coefficient& c) {
  if (c.is_zero()) return;
  Basis sorted = b;
  int sign = canonical_basis(chart_, sorted);
  if (sign == 0) return;
  auto& lt = terms_[sorted];
  add_term(lt, logs, sign > 0 ? c : -c);
  if (lt.empty()) terms_.erase(sorted);
}

int LogForm::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw DomainError("form " + to_string() + " is not homogeneous");
  return static_cast<int>(terms_.begin()->first.size());
}

bool LogForm::is_homogeneous() const {
  for (const auto& [b, _] : terms_)
    if (b.size() != terms_.begin()->first.size()) return false;
  return true;
}

LogForm LogForm::component(int degree) const {
  LogForm w(chart_);
  for (const auto& [b, lt] : terms_)
    if (static_cast<int>(b.size()) == degree) w.terms_.emplace(b, lt);
  return w;
}

LogFunction LogForm::coefficient(const Basis& b) const {
  Basis sorted = b;
  int sign = canonical_basis(chart_, sorted);
  auto it = terms_.find(sorted);
  if (sign == 0 || it == terms_.end()) return LogFunction(chart_);
  LogFunction f(chart_, it->second);
  return sign > 0 ? f : -f;
}

bool LogForm::has_phantom_logs() const {
  for (const auto& [b, lt] : terms_)
    if (LogFunction(chart_, lt).has_phantom_logs()) return true;
  return false;
}

LogForm LogForm::operator-() const {
  LogForm w = *this;
  for (auto& [_, lt] : w.terms_)
    for (auto& [__, c] : lt) c = -c;
  return w;
}

LogForm& LogForm::operator+=(const LogForm& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [b, lt] : o.terms_)
    for (const auto& [l, c] : lt) {
      auto& mine = terms_[b];
      add_term(mine, l, c);
      if (mine.empty()) terms_.erase(b);
    }
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& o) { return *this += -o; }

LogForm LogForm::scaled(const Scalar& c) const {
  LogForm w(chart_);
  for (const auto& [b, lt] : terms_)
    for (const auto& [l, v] : lt) w.add(b, l, v.scaled(c));
  return w;
}

LogForm LogForm::times(const LogFunction& f) const {
  require_same_chart(chart_, f.chart());
  LogForm w(chart_);
  for (const auto& [b, lt] : terms_)
    for (const auto& [l, c] : multiply(lt, f.terms())) w.add(b, l, c);
  return w;
}

std::string LogForm::to_string() const {
  std::string out;
  for (const auto& [b, lt] : terms_) {
    std::string suffix;
    for (const auto& n : b) suffix += (suffix.empty() ? "" : " ^wedge ") + basis_factor(chart_, n);
    if (b.size() > 1) {
      // Keep the coefficient product to the left of the first wedge.
      std::string first = basis_factor(chart_, b.front());
      std::string rest = suffix.substr(first.size());
      std::string part;
      render_terms(lt, first, part);
      part = lt.size() > 1 ? "(" + part + ")" + rest : part + rest;
      if (out.empty()) {
        out = part;
      } else if (part.front() == '-') {
        out += " - " + part.substr(1);
      } else {
        out += " + " + part;
      }
      continue;
    }
    render_terms(lt, suffix, out);
  }
  return out.empty() ? "0" : out;
}

// ---- operations ----

LogFunction log_of(const Chart& chart, const MonoidElement& m) {
  LogFunction f(chart, Coefficient(m.log_constant()) + Coefficient(m.q));
  for (const auto& [n, k] : m.r) f += LogFunction::log_coordinate(chart, n).scaled(k);
  for (const auto& [n, k] : m.t) f += LogFunction::log_coordinate(chart, n).scaled(k);
  return f;
}

LogForm d(const LogFunction& f) {
  const Chart& chart = f.chart();
  LogForm w(chart);
  for (const auto& [logs, c] : f.terms()) {
    for (const auto& n : chart.free) w.add({n}, logs, c.diff(n));
    for (const auto& n : chart.basic) w.add({n}, logs, c.diff(n) * Coefficient::variable(n));
    for (const auto& n : chart.angular) w.add({n}, logs, c.diff(n));
    for (const auto& [n, k] : logs) {
      Exponents lower = logs;
      if (--lower[n] == 0) lower.erase(n);
      w.add({n}, lower, c.scaled(k));
    }
  }
  return w;
}

LogForm d(const LogForm& w) {
  LogForm out(w.chart());
  for (const auto& [b, lt] : w.terms()) {
    LogForm df = d(LogFunction(w.chart(), lt));
    for (const auto& [b1, lt1] : df.terms()) {
      Basis joined = b1;
      joined.insert(joined.end(), b.begin(), b.end());
      for (const auto& [l, c] : lt1) out.add(joined, l, c);
    }
  }
  return out;
}

LogForm wedge(const LogForm& a, const LogForm& b) {
  require_same_chart(a.chart(), b.chart());
  LogForm out(a.chart());
  for (const auto& [ba, la] : a.terms())
    for (const auto& [bb, lb] : b.terms()) {
      Basis joined = ba;
      joined.insert(joined.end(), bb.begin(), bb.end());
      for (const auto& [l, c] : multiply(la, lb)) out.add(joined, l, c);
    }
  return out;
}

namespace {

// Pullbacks of log(v) for every basic and phantom target coordinate.
std::map<std::string, LogFunction> pulled_logs(const WeakMorphism& f) {
  std::map<std::string, LogFunction> out;
  for (const auto& [n, a] : f.r) out.emplace(n, log_of(f.source, a.value));
  for (const auto& [n, m] : f.t) out.emplace(n, log_of(f.source, m));
  return out;
}

LogFunction pull_terms(const WeakMorphism& f, const LogTerms& terms,
                       const std::map<std::string, LogFunction>& logs) {
  LogFunction out(f.source);
  for (const auto& [l, c] : terms) {
    LogFunction term(f.source, f.pull(c));
    for (const auto& [n, k] : l) term = term * logs.at(n).pow(k);
    out += term;
  }
  return out;
}

}  // namespace

LogFunction pullback(const WeakMorphism& f, const LogFunction& g) {
  require_same_chart(f.target, g.chart());
  return pull_terms(f, g.terms(), pulled_logs(f));
}

LogForm pullback(const WeakMorphism& f, const LogForm& w) {
  require_same_chart(f.target, w.chart());
  auto logs = pulled_logs(f);
  std::map<std::string, LogForm> one_forms;
  for (const auto& n : f.target.coordinates()) {
    switch (f.target.role(n)) {
      case Role::kFree: one_forms.emplace(n, d(LogFunction(f.source, f.x.at(n)))); break;
      case Role::kBasic:
      case Role::kPhantom: one_forms.emplace(n, d(logs.at(n))); break;
      case Role::kAngular: {
        const AngleAssign& a = f.theta.at(n);
        one_forms.emplace(n, a.source ? LogForm::basis(f.source, *a.source).scaled(a.sign) : LogForm(f.source));
        break;
      }
      default: break;
    }
  }
  LogForm out(f.source);
  for (const auto& [b, lt] : w.terms()) {
    LogForm term(pull_terms(f, lt, logs));
    if (term.is_zero()) continue;
    for (const auto& n : b) term = wedge(term, one_forms.at(n));
    out += term;
  }
  return out;
}

}  // namespace logcorners

#include "logcorners/polynomial.hpp"

#include <algorithm>
#include <vector>

#include <cmath>

#include "logcorners/error.hpp"

namespace logcorners {

bool graded_less(const Exponents& a, const Exponents& b) {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  // Reverse map order so that x > y when x sorts first by name.
  return b < a;
}

Polynomial::Polynomial(GaussRational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

Polynomial Polynomial::variable(const std::string& name, int power) {
  Polynomial p;
  if (power == 0) return Polynomial(1);
  p.terms_.emplace(Exponents{{name, power}}, GaussRational(1));
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, GaussRational c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Polynomial::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

GaussRational Polynomial::constant_value() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? GaussRational(0) : it->second;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [e, _] : terms_)
    for (const auto& [name, __] : e) out.insert(name);
  return out;
}

int Polynomial::degree(const std::string& var) const {
  int d = 0;
  for (const auto& [e, _] : terms_) {
    auto it = e.find(var);
    if (it != e.end()) d = std::max(d, it->second);
  }
  return d;
}

const Exponents& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (graded_less(best->first, it->first)) best = it;
  return best->first;
}

const GaussRational& Polynomial::leading_coefficient() const { return terms_.at(leading_monomial()); }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [_, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = add_exponents(ea, eb);
      GaussRational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& [_, v] : p.terms_) v *= c;
  return p;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::map<int, Polynomial> Polynomial::as_univariate(const std::string& var) const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = 0;
    if (auto it = rest.find(var); it != rest.end()) {
      k = it->second;
      rest.erase(it);
    }
    out[k].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Polynomial Polynomial::from_univariate(const std::string& var, const std::map<int, Polynomial>& u) {
  Polynomial out;
  for (const auto& [k, p] : u) out += p * variable(var, k);
  return out;
}

namespace {

int top_degree(const std::map<int, Polynomial>& u) { return u.empty() ? -1 : u.rbegin()->first; }

void univariate_axpy(std::map<int, Polynomial>& acc, const Polynomial& factor, int shift,
                     const std::map<int, Polynomial>& b) {
  // acc -= factor * x^shift * b
  for (const auto& [k, c] : b) {
    Polynomial& slot = acc[k + shift];
    slot -= factor * c;
    if (slot.is_zero()) acc.erase(k + shift);
  }
}

std::string smallest_variable(const Polynomial& p) { return *p.variables().begin(); }

// Pseudo-remainder of a by b as polynomials in var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var) {
  auto r = a.as_univariate(var);
  auto bu = b.as_univariate(var);
  int db = top_degree(bu);
  Polynomial lcb = bu.at(db);
  while (!r.empty() && top_degree(r) >= db) {
    int dr = top_degree(r);
    Polynomial lcr = r.at(dr);
    for (auto& [_, c] : r) c = c * lcb;
    univariate_axpy(r, lcr, dr - db, bu);
    // Drop exact zeros that survived the scaling.
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }
  return Polynomial::from_univariate(var, r);
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coefficient().inverse());
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const auto& [_, c] : p.as_univariate(var)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial monomial_gcd(const Exponents& m, const Polynomial& p) {
  Exponents out = m;
  for (const auto& [e, _] : p.terms()) {
    for (auto it = out.begin(); it != out.end();) {
      auto f = e.find(it->first);
      int v = f == e.end() ? 0 : std::min(it->second, f->second);
      if (v == 0) {
        it = out.erase(it);
      } else {
        it->second = v;
        ++it;
      }
    }
    if (out.empty()) break;
  }
  return Polynomial::monomial(out);
}

}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return Polynomial();
  if (d.is_constant()) return scaled(d.constant_value().inverse());
  std::string var = smallest_variable(d);
  auto r = as_univariate(var);
  auto du = d.as_univariate(var);
  int dd = top_degree(du);
  const Polynomial& lcd = du.at(dd);
  std::map<int, Polynomial> q;
  while (!r.empty() && top_degree(r) >= dd) {
    int dr = top_degree(r);
    auto coef = r.at(dr).divide_exact(lcd);
    if (!coef) return std::nullopt;
    q[dr - dd] += *coef;
    univariate_axpy(r, *coef, dr - dd, du);
  }
  if (!r.empty()) return std::nullopt;
  return from_univariate(var, q);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.terms().size() == 1) return monomial_gcd(a.terms().begin()->first, b);
  if (b.terms().size() == 1) return monomial_gcd(b.terms().begin()->first, a);

  auto va = a.variables();
  auto vb = b.variables();
  std::string var;
  for (const auto& v : va)
    if (vb.count(v)) {
      var = v;
      break;
    }
  if (var.empty()) {
    // No shared variable: any common factor lives in the contents.
    std::string x = *va.begin();
    return gcd(content_in(a, x), b);
  }
  // Variables present in only one operand can only contribute through contents.
  for (const auto& v : va)
    if (!vb.count(v)) return gcd(content_in(a, v), b);
  for (const auto& v : vb)
    if (!va.count(v)) return gcd(a, content_in(b, v));

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial p = *a.divide_exact(ca);
  Polynomial q = *b.divide_exact(cb);
  if (p.degree(var) < q.degree(var)) std::swap(p, q);
  while (!q.is_zero() && q.degree(var) > 0) {
    Polynomial r = pseudo_remainder(p, q, var);
    p = std::move(q);
    if (r.is_zero()) {
      q = Polynomial();
      break;
    }
    Polynomial cr = content_in(r, var);
    q = *r.divide_exact(cr);
  }
  Polynomial g = q.is_zero() ? p : Polynomial(1);
  if (!g.is_constant()) g = *g.divide_exact(content_in(g, var));
  return monic(c * g);
}

Polynomial Polynomial::conjugated(const std::function<std::string(const std::string&)>& rename) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents r;
    for (const auto& [name, k] : e) r[rename(name)] += k;
    out += monomial(r, c.conj());
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    Exponents kept;
    for (const auto& [name, k] : e) {
      auto it = values.find(name);
      if (it == values.end()) {
        kept[name] = k;
      } else {
        term = term * it->second.pow(k);
      }
    }
    out += term * monomial(kept);
  }
  return out;
}

std::complex<double> Polynomial::eval(const std::map<std::string, double>& values) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (const auto& [name, k] : e) {
      auto it = values.find(name);
      if (it == values.end()) throw DomainError("no value assigned to parameter '" + name + "'");
      t *= std::pow(it->second, k);
    }
    sum += t;
  }
  return sum;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  return a.terms_ <=> b.terms_;
}

std::string Polynomial::to_string(bool* needs_parens) const {
  if (needs_parens) *needs_parens = terms_.size() > 1;
  if (terms_.empty()) return "0";
  // Highest graded term first reads naturally.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return graded_less(y->first, x->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string mono;
    for (const auto& [name, k] : e) {
      if (!mono.empty()) mono += "*";
      mono += name;
      if (k != 1) mono += "^" + std::to_string(k);
    }
    std::string coef;
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussRational shown = negative ? -c : c;
    if (!mono.empty() && shown.is_one()) {
      coef = mono;
    } else if (mono.empty()) {
      coef = shown.to_string();
    } else {
      coef = shown.to_string() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + coef : coef;
    } else {
      out += negative ? " - " : " + ";
      out += coef;
    }
    first = false;
  }
  if (needs_parens && terms_.size() == 1) {
    // A single negative term also needs protection inside products.
    *needs_parens = out.front() == '-';
  }
  return out;
}

}  // namespace logcorners

#include "logcorners/coefficient.hpp"

#include <cmath>

#include "logcorners/error.hpp"

namespace logcorners {

namespace {

// i^n for an integer n.
Scalar i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return Scalar::i();
    case 2: return -1;
    default: return -Scalar::i();
  }
}

std::string wave_string(const std::string& theta, int k) {
  if (k == 1) return "cis(" + theta + ")";
  if (k == -1) return "cis(-" + theta + ")";
  return "cis(" + std::to_string(k) + "*" + theta + ")";
}

// Splits off a leading minus of a single-term rendering.
std::string strip_sign(std::string s, bool* negative) {
  *negative = !s.empty() && s.front() == '-';
  return *negative ? s.substr(1) : s;
}

}  // namespace

// ---- FourierPoly ----

FourierPoly::FourierPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(FourierKey{}, std::move(c));
}

FourierPoly FourierPoly::variable(const std::string& name, int power) {
  if (power < 0) throw DomainError("negative power of coordinate '" + name + "'");
  return term(FourierKey{power == 0 ? Exponents{} : Exponents{{name, power}}, {}}, 1);
}

FourierPoly FourierPoly::wave(const std::string& theta, int k) {
  return term(FourierKey{{}, k == 0 ? Exponents{} : Exponents{{theta, k}}}, 1);
}

FourierPoly FourierPoly::term(FourierKey key, Scalar c) {
  FourierPoly p;
  p.add(key, c);
  return p;
}

void FourierPoly::add(const FourierKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool FourierPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == FourierKey{});
}

Scalar FourierPoly::constant_term() const {
  auto it = terms_.find(FourierKey{});
  return it == terms_.end() ? Scalar() : it->second;
}

FourierPoly FourierPoly::without_constant() const {
  FourierPoly p = *this;
  p.terms_.erase(FourierKey{});
  return p;
}

int FourierPoly::degree(const std::string& name) const {
  int d = 0;
  for (const auto& [k, _] : terms_) {
    auto it = k.mono.find(name);
    if (it != k.mono.end()) d = std::max(d, it->second);
  }
  return d;
}

bool FourierPoly::depends_on(const std::string& name) const {
  for (const auto& [k, _] : terms_)
    if (k.mono.contains(name) || k.fourier.contains(name)) return true;
  return false;
}

FourierPoly FourierPoly::operator-() const {
  FourierPoly p = *this;
  for (auto& [_, c] : p.terms_) c = -c;
  return p;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

FourierPoly& FourierPoly::operator-=(const FourierPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
  FourierPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add({add_exponents(ka.mono, kb.mono), add_exponents(ka.fourier, kb.fourier)}, ca * cb);
  return out;
}

FourierPoly FourierPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  FourierPoly out;
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

FourierPoly FourierPoly::pow(int n) const {
  if (n < 0) throw DomainError("negative power of a coefficient function");
  FourierPoly r(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

FourierPoly FourierPoly::diff(const std::string& name) const {
  FourierPoly out;
  for (const auto& [k, c] : terms_) {
    if (auto it = k.mono.find(name); it != k.mono.end()) {
      FourierKey nk = k;
      if (--nk.mono[name] == 0) nk.mono.erase(name);
      out.add(nk, c * Scalar(it->second));
    } else if (auto jt = k.fourier.find(name); jt != k.fourier.end()) {
      out.add(k, c * Scalar(jt->second) * Scalar::i());
    }
  }
  return out;
}

FourierPoly FourierPoly::substitute(const std::map<std::string, FourierPoly>& vars,
                                    const std::map<std::string, AngleAssign>& angles) const {
  FourierPoly out;
  for (const auto& [k, c] : terms_) {
    FourierPoly t(c);
    FourierKey kept;
    for (const auto& [name, e] : k.mono) {
      auto it = vars.find(name);
      if (it == vars.end()) {
        kept.mono[name] = e;
      } else {
        t = t * it->second.pow(e);
      }
    }
    for (const auto& [name, f] : k.fourier) {
      auto it = angles.find(name);
      if (it == angles.end()) {
        kept.fourier[name] += f;
        continue;
      }
      const AngleAssign& a = it->second;
      t = t.scaled(i_power(static_cast<long>(f) * a.quarter_turns));
      if (a.source) kept.fourier[*a.source] += a.sign * f;
    }
    std::erase_if(kept.fourier, [](const auto& kv) { return kv.second == 0; });
    out += t * term(kept, 1);
  }
  return out;
}

std::complex<double> FourierPoly::eval(const Point& coords, const Point& params) const {
  std::complex<double> sum = 0;
  for (const auto& [k, c] : terms_) {
    std::complex<double> v = c.eval(params);
    for (const auto& [name, e] : k.mono) {
      auto it = coords.find(name);
      if (it == coords.end()) throw DomainError("no value assigned to coordinate '" + name + "'");
      v *= std::pow(it->second, e);
    }
    for (const auto& [name, f] : k.fourier) {
      auto it = coords.find(name);
      if (it == coords.end()) throw DomainError("no value assigned to coordinate '" + name + "'");
      v *= std::polar(1.0, f * it->second);
    }
    sum += v;
  }
  return sum;
}

std::string FourierPoly::to_string(bool* compound) const {
  if (compound) *compound = terms_.size() > 1;
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string symbols;
    for (const auto& [name, e] : k.mono) {
      if (!symbols.empty()) symbols += "*";
      symbols += name;
      if (e != 1) symbols += "^" + std::to_string(e);
    }
    for (const auto& [name, f] : k.fourier) {
      if (!symbols.empty()) symbols += "*";
      symbols += wave_string(name, f);
    }
    bool negative = false;
    std::string coef;
    if (c.is_compound() && c.terms().size() > 1) {
      coef = "(" + c.to_string() + ")";
    } else {
      coef = strip_sign(c.to_string(), &negative);
    }
    std::string body;
    if (symbols.empty()) {
      body = coef;
    } else if (coef == "1") {
      body = symbols;
    } else {
      body = coef + "*" + symbols;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  if (compound && terms_.size() == 1) *compound = out.front() == '-';
  return out;
}

// ---- Coefficient ----

Coefficient::Coefficient(FourierPoly p) {
  if (!p.is_zero()) terms_.emplace(FourierPoly(), std::move(p));
}

Coefficient Coefficient::variable(const std::string& name, int power) {
  return {FourierPoly::variable(name, power)};
}

Coefficient Coefficient::exp(const FourierPoly& q) { return exp_times(q, FourierPoly(1)); }

Coefficient Coefficient::exp_times(const FourierPoly& q, const FourierPoly& p) {
  if (!q.constant_term().is_zero())
    throw DomainError("exp of the nonzero constant " + q.constant_term().to_string() +
                      " has no exact representation");
  Coefficient c;
  c.add(q, p);
  return c;
}

void Coefficient::add(const FourierPoly& q, const FourierPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(q, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Coefficient::is_polynomial() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

FourierPoly Coefficient::as_polynomial() const {
  if (!is_polynomial()) throw NotExactError("coefficient " + to_string() + " carries exp factors");
  return terms_.empty() ? FourierPoly() : terms_.begin()->second;
}

bool Coefficient::is_constant() const { return is_polynomial() && as_polynomial().is_constant(); }

Scalar Coefficient::as_constant() const {
  if (!is_constant()) throw DomainError("coefficient " + to_string() + " is not constant");
  return as_polynomial().constant_term();
}

bool Coefficient::depends_on(const std::string& name) const {
  for (const auto& [q, p] : terms_)
    if (q.depends_on(name) || p.depends_on(name)) return true;
  return false;
}

bool Coefficient::exp_depends_on(const std::string& name) const {
  for (const auto& [q, _] : terms_)
    if (q.depends_on(name)) return true;
  return false;
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  for (auto& [_, p] : c.terms_) p = -p;
  return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [q, p] : o.terms_) add(q, p);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [q, p] : o.terms_) add(q, -p);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [qa, pa] : a.terms_)
    for (const auto& [qb, pb] : b.terms_) out.add(qa + qb, pa * pb);
  return out;
}

Coefficient Coefficient::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  Coefficient out;
  for (const auto& [q, p] : terms_) out.add(q, p.scaled(c));
  return out;
}

Coefficient Coefficient::pow(int n) const {
  if (n < 0) throw DomainError("negative power of a coefficient function");
  Coefficient r(1);
  for (int k = 0; k < n; ++k) r *= *this;
  return r;
}

Coefficient Coefficient::diff(const std::string& name) const {
  Coefficient out;
  for (const auto& [q, p] : terms_) out.add(q, p.diff(name) + q.diff(name) * p);
  return out;
}

Coefficient Coefficient::substitute(const std::map<std::string, Coefficient>& vars,
                                    const std::map<std::string, AngleAssign>& angles) const {
  bool all_poly = true;
  for (const auto& [_, v] : vars) all_poly = all_poly && v.is_polynomial();
  std::map<std::string, FourierPoly> poly_vars;
  for (const auto& [n, v] : vars)
    if (v.is_polynomial()) poly_vars.emplace(n, v.as_polynomial());

  Coefficient out;
  for (const auto& [q, p] : terms_) {
    for (const auto& [n, v] : vars)
      if (!v.is_polynomial() && q.depends_on(n))
        throw DomainError("exp argument substitution by the non-polynomial value " + v.to_string());
    FourierPoly q2 = q.substitute(poly_vars, angles);
    Coefficient e = exp(q2);
    if (all_poly) {
      out += e * Coefficient(p.substitute(poly_vars, angles));
      continue;
    }
    // Expand each term with Coefficient-valued substitutions.
    for (const auto& [k, c] : p.terms()) {
      FourierKey kept;
      Coefficient t(c);
      for (const auto& [n, pw] : k.mono) {
        auto it = vars.find(n);
        if (it == vars.end()) {
          kept.mono[n] = pw;
        } else {
          t *= it->second.pow(pw);
        }
      }
      kept.fourier = k.fourier;
      FourierPoly waves = FourierPoly::term(kept, 1).substitute({}, angles);
      out += e * t * Coefficient(waves);
    }
  }
  return out;
}

Coefficient Coefficient::at_zero(const std::string& name) const { return substitute({{name, Coefficient()}}); }

bool Coefficient::divisible_by(const std::string& name) const {
  for (const auto& [q, p] : terms_)
    for (const auto& [k, _] : p.terms())
      if (!k.mono.contains(name)) return false;
  return true;
}

Coefficient Coefficient::divided_by_variable(const std::string& name) const {
  if (!divisible_by(name)) throw DomainError("coefficient " + to_string() + " is not divisible by " + name);
  Coefficient out;
  for (const auto& [q, p] : terms_) {
    FourierPoly np;
    for (const auto& [k, c] : p.terms()) {
      FourierKey nk = k;
      if (--nk.mono[name] == 0) nk.mono.erase(name);
      np.add(nk, c);
    }
    out.add(q, np);
  }
  return out;
}

std::complex<double> Coefficient::eval(const Point& coords, const Point& params) const {
  std::complex<double> sum = 0;
  for (const auto& [q, p] : terms_) {
    std::complex<double> v = p.eval(coords, params);
    if (!q.is_zero()) v *= std::exp(q.eval(coords, params));
    sum += v;
  }
  return sum;
}

std::string Coefficient::to_string(bool* compound) const {
  if (terms_.empty()) {
    if (compound) *compound = false;
    return "0";
  }
  if (is_polynomial()) return terms_.begin()->second.to_string(compound);
  if (compound) *compound = terms_.size() > 1;
  std::string out;
  bool first = true;
  for (const auto& [q, p] : terms_) {
    bool pc = false;
    std::string ps = p.to_string(&pc);
    bool negative = false;
    if (!pc) ps = strip_sign(ps, &negative);
    std::string body;
    if (q.is_zero()) {
      body = pc ? "(" + ps + ")" : ps;
    } else {
      body = "exp(" + q.to_string() + ")";
      if (ps != "1") body += "*" + (pc ? "(" + ps + ")" : ps);
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  if (compound && terms_.size() == 1) *compound = out.front() == '-';
  return out;
}

}  // namespace logcorners

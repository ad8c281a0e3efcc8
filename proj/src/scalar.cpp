#include "logcorners/scalar.hpp"

#include <cmath>
#include <numbers>

#include "logcorners/error.hpp"

namespace logcorners {

namespace {

bool is_prime_symbol(const std::string& name) {
  return !name.empty() && std::isdigit(static_cast<unsigned char>(name.front()));
}

void factor_into(mpz_class n, int sign, Exponents& out) {
  for (unsigned long p = 2; p <= 1000000 && n > 1; ++p) {
    if (p * p > n) break;
    while (n % p == 0) {
      out[std::to_string(p)] += sign;
      n /= p;
    }
  }
  // The cofactor is prime or beyond the trial bound; either way it is kept as
  // a single independent symbol.
  if (n > 1) out[n.get_str()] += sign;
}

}  // namespace

Scalar::Scalar(RationalFunction c) {
  if (!c.is_zero()) terms_.emplace(TranscendentalMonomial{}, std::move(c));
}

Scalar Scalar::pi() {
  Scalar s;
  s.terms_.emplace(TranscendentalMonomial{1, {}}, RationalFunction(1));
  return s;
}

Scalar Scalar::parameter(const std::string& name) { return {RationalFunction(Polynomial::variable(name))}; }

Scalar Scalar::log_symbol(const std::string& name) {
  Scalar s;
  s.terms_.emplace(TranscendentalMonomial{0, {{name, 1}}}, RationalFunction(1));
  return s;
}

Scalar Scalar::log_rational(const mpq_class& q) {
  if (sgn(q) <= 0) throw DomainError("logarithm of a non-positive rational");
  Exponents e;
  factor_into(q.get_num(), 1, e);
  factor_into(q.get_den(), -1, e);
  Scalar out;
  for (const auto& [p, k] : e)
    if (k != 0) out += Scalar(k) * log_symbol(p);
  return out;
}

Scalar Scalar::rational(long num, long den) { return {GaussRational(mpq_class(num, den))}; }

bool Scalar::is_rational_function() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == TranscendentalMonomial{});
}

RationalFunction Scalar::as_rational_function() const {
  if (!is_rational_function()) throw DomainError("scalar " + to_string() + " is not a rational function");
  return terms_.empty() ? RationalFunction() : terms_.begin()->second;
}

bool Scalar::is_number() const { return is_rational_function() && as_rational_function().is_constant(); }

GaussRational Scalar::as_number() const {
  if (!is_number()) throw DomainError("scalar " + to_string() + " is not a number");
  return as_rational_function().num().constant_value();
}

void Scalar::add_term(const TranscendentalMonomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& [_, c] : s.terms_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma.pi_degree + mb.pi_degree, add_exponents(ma.logs, mb.logs)}, ca * cb);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::pow(int n) const {
  if (n < 0) {
    if (!is_rational_function()) throw DomainError("negative power of a transcendental scalar");
    return {as_rational_function().pow(n)};
  }
  Scalar r(1);
  for (int k = 0; k < n; ++k) r *= *this;
  return r;
}

Scalar Scalar::divided_by(const Scalar& d) const {
  if (!d.is_rational_function() || d.is_zero())
    throw DomainError("cannot divide by " + d.to_string());
  return *this * Scalar(d.as_rational_function().inverse());
}

Scalar Scalar::conjugated(const std::function<std::string(const std::string&)>& conj_name) const {
  Scalar out;
  auto rename = [&](const std::string& n) { return is_prime_symbol(n) ? n : conj_name(n); };
  for (const auto& [m, c] : terms_) {
    TranscendentalMonomial cm{m.pi_degree, {}};
    for (const auto& [n, k] : m.logs) cm.logs[rename(n)] += k;
    out.add_term(cm, c.conjugated(rename));
  }
  return out;
}

Scalar Scalar::substitute(const std::map<std::string, RationalFunction>& parameters,
                          const std::map<std::string, Scalar>& logs) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Scalar term(parameters.empty() ? c : c.substitute(parameters));
    TranscendentalMonomial kept{m.pi_degree, {}};
    for (const auto& [n, k] : m.logs) {
      auto it = logs.find(n);
      if (it == logs.end()) {
        kept.logs[n] = k;
      } else {
        term *= it->second.pow(k);
      }
    }
    Scalar mono;
    mono.terms_.emplace(kept, RationalFunction(1));
    out += term * mono;
  }
  return out;
}

std::complex<double> Scalar::eval(const std::map<std::string, double>& parameters) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.eval(parameters);
    t *= std::pow(std::numbers::pi, m.pi_degree);
    for (const auto& [n, k] : m.logs) {
      double v;
      if (is_prime_symbol(n)) {
        v = std::log(std::stod(n));
      } else {
        auto it = parameters.find(n);
        if (it == parameters.end()) throw DomainError("no value assigned to parameter '" + n + "'");
        if (!(it->second > 0)) throw DomainError("parameter '" + n + "' must be positive");
        v = std::log(it->second);
      }
      t *= std::pow(v, k);
    }
    sum += t;
  }
  return sum;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) { return a.terms_ <=> b.terms_; }

bool Scalar::is_compound() const {
  if (terms_.size() > 1) return true;
  if (terms_.empty()) return false;
  bool negative = false;
  const auto& c = terms_.begin()->second;
  std::string f = c.to_factor_string(&negative);
  return negative;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coef = c.to_factor_string(&negative);
    std::string symbols;
    if (m.pi_degree > 0) symbols = m.pi_degree == 1 ? "pi" : "pi^" + std::to_string(m.pi_degree);
    for (const auto& [n, k] : m.logs) {
      if (!symbols.empty()) symbols += "*";
      symbols += "log(" + n + ")";
      if (k != 1) symbols += "^" + std::to_string(k);
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
  return out;
}

}  // namespace logcorners

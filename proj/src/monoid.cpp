#include "logcorners/monoid.hpp"

#include "logcorners/error.hpp"

namespace logcorners {

MonoidElement MonoidElement::constant(const mpq_class& c, const Exponents& sigma) {
  if (sgn(c) <= 0) throw DomainError("monoid constants must be positive");
  MonoidElement m;
  m.c = c;
  m.sigma = sigma;
  return m;
}

MonoidElement MonoidElement::parameter(const std::string& name, int power) {
  return constant(1, power == 0 ? Exponents{} : Exponents{{name, power}});
}

MonoidElement MonoidElement::basic(const std::string& r, int power) {
  if (power < 0) throw DomainError("negative power of boundary coordinate '" + r + "'");
  MonoidElement m;
  if (power) m.r[r] = power;
  return m;
}

MonoidElement MonoidElement::phantom(const std::string& t, int power) {
  if (power < 0) throw DomainError("negative power of phantom coordinate '" + t + "'");
  MonoidElement m;
  if (power) m.t[t] = power;
  return m;
}

MonoidElement MonoidElement::exponential(const FourierPoly& q) {
  if (!q.constant_term().is_zero()) throw DomainError("exp argument must have zero constant term");
  MonoidElement m;
  m.q = q;
  return m;
}

Scalar MonoidElement::constant_value() const {
  return {RationalFunction::monomial(sigma, GaussRational(c))};
}

Scalar MonoidElement::log_constant() const {
  Scalar s = Scalar::log_rational(c);
  for (const auto& [n, k] : sigma) s += Scalar(k) * Scalar::log_symbol(n);
  return s;
}

Coefficient MonoidElement::alpha() const {
  if (is_phantom()) return {};
  FourierPoly p(constant_value());
  for (const auto& [n, k] : r) p = p * FourierPoly::variable(n, k);
  return Coefficient::exp_times(q, p);
}

MonoidElement MonoidElement::operator*(const MonoidElement& o) const {
  MonoidElement m;
  m.c = c * o.c;
  m.sigma = add_exponents(sigma, o.sigma);
  m.q = q + o.q;
  m.r = add_exponents(r, o.r);
  m.t = add_exponents(t, o.t);
  return m;
}

MonoidElement MonoidElement::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  MonoidElement m;
  for (int k = 0; k < n; ++k) m = m * *this;
  return m;
}

MonoidElement MonoidElement::inverse() const {
  if (!r.empty() || !t.empty()) throw DomainError("monoid element " + to_string() + " is not a unit");
  MonoidElement m;
  m.c = 1 / c;
  m.sigma = scale_exponents(sigma, -1);
  m.q = -q;
  return m;
}

std::string MonoidElement::to_string() const {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  if (c != 1 || (sigma.empty() && q.is_zero() && r.empty() && t.empty())) append(c.get_str());
  for (const auto& [n, k] : sigma) append(k == 1 ? n : n + "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k)));
  if (!q.is_zero()) append("exp(" + q.to_string() + ")");
  for (const auto& [n, k] : r) append(k == 1 ? n : n + "^" + std::to_string(k));
  for (const auto& [n, k] : t) append(k == 1 ? n : n + "^" + std::to_string(k));
  return out;
}

}  // namespace logcorners

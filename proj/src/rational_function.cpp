#include "logcorners/rational_function.hpp"

#include "logcorners/error.hpp"

namespace logcorners {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("division by zero");
  normalize();
}

RationalFunction RationalFunction::monomial(const Exponents& e, GaussRational c) {
  Exponents pos;
  Exponents neg;
  for (const auto& [name, k] : e) (k > 0 ? pos : neg)[name] = std::abs(k);
  if (neg.empty()) return {Polynomial::monomial(pos, std::move(c))};
  return {Polynomial::monomial(pos, std::move(c)), Polynomial::monomial(neg)};
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_value().inverse());
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  GaussRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DomainError("division by zero");
  return {den_, num_};
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction r = *this;
  r.num_ = num_.pow(n);
  r.den_ = den_.pow(n);
  // Powers of coprime polynomials stay coprime; only monicity needs care.
  r.normalize();
  return r;
}

RationalFunction RationalFunction::conjugated(
    const std::function<std::string(const std::string&)>& rename) const {
  return {num_.conjugated(rename), den_.conjugated(rename)};
}

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction>& values) const {
  auto apply = [&](const Polynomial& p) {
    RationalFunction out;
    for (const auto& [e, c] : p.terms()) {
      RationalFunction term{Polynomial(c)};
      Exponents kept;
      for (const auto& [name, k] : e) {
        auto it = values.find(name);
        if (it == values.end()) {
          kept[name] = k;
        } else {
          term *= it->second.pow(k);
        }
      }
      term *= RationalFunction(Polynomial::monomial(kept));
      out += term;
    }
    return out;
  };
  return apply(num_) / apply(den_);
}

std::complex<double> RationalFunction::eval(const std::map<std::string, double>& values) const {
  std::complex<double> d = den_.eval(values);
  if (d == 0.0) throw DomainError("denominator vanishes at the given parameter values");
  return num_.eval(values) / d;
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RationalFunction::to_factor_string(bool* negative) const {
  *negative = false;
  bool num_parens = false;
  Polynomial shown = num_;
  if (num_.terms().size() == 1) {
    const auto& c = num_.terms().begin()->second;
    if (c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      *negative = true;
      shown = -num_;
    }
  }
  std::string n = shown.to_string(&num_parens);
  if (den_.is_one()) return num_parens ? "(" + n + ")" : n;
  bool den_parens = false;
  std::string d = den_.to_string(&den_parens);
  if (num_parens) n = "(" + n + ")";
  // Denominators always get parentheses unless they are a bare symbol.
  bool bare = den_.terms().size() == 1 && den_.terms().begin()->second.is_one() &&
              den_.terms().begin()->first.size() == 1 && den_.terms().begin()->first.begin()->second == 1;
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace logcorners

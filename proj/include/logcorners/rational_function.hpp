#pragma once

#include "logcorners/polynomial.hpp"

namespace logcorners {

/// Reduced fraction of polynomials over Q(i). The denominator is monic in
/// graded-lex order and coprime to the numerator, so equal values have equal
/// representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(GaussRational c) : RationalFunction(Polynomial(std::move(c))) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  /// sigma^e for a (possibly negative) exponent vector over parameters.
  static RationalFunction monomial(const Exponents& e, GaussRational c = 1);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction inverse() const;
  RationalFunction pow(int n) const;

  RationalFunction conjugated(const std::function<std::string(const std::string&)>& rename) const;
  RationalFunction substitute(const std::map<std::string, RationalFunction>& values) const;

  std::complex<double> eval(const std::map<std::string, double>& values) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

  /// Render as a product factor. `negative` reports whether a leading minus
  /// was factored out (the returned text then omits it).
  std::string to_factor_string(bool* negative) const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_{1};
};

}  // namespace logcorners

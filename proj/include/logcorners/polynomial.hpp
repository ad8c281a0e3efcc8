#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "logcorners/gauss_rational.hpp"

namespace logcorners {

/// Sparse multivariate polynomial over Q(i) in named (positive-parameter)
/// variables. Exponents are nonnegative; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, GaussRational>;

  Polynomial() = default;
  Polynomial(GaussRational c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const std::string& name, int power = 1);
  static Polynomial monomial(const Exponents& e, GaussRational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant coefficient value; only meaningful when is_constant().
  GaussRational constant_value() const;

  std::set<std::string> variables() const;
  int degree(const std::string& var) const;

  /// Coefficient of the leading monomial in graded-lex order.
  const GaussRational& leading_coefficient() const;
  const Exponents& leading_monomial() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const GaussRational& c) const;
  Polynomial pow(int n) const;

  /// Quotient when `d` divides this polynomial exactly, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  /// View as a polynomial in `var` with polynomial coefficients.
  std::map<int, Polynomial> as_univariate(const std::string& var) const;
  static Polynomial from_univariate(const std::string& var, const std::map<int, Polynomial>& u);

  /// Coefficient-wise complex conjugation combined with variable renaming.
  Polynomial conjugated(const std::function<std::string(const std::string&)>& rename) const;
  /// Substitute variables by polynomials (missing variables are kept).
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;

  std::complex<double> eval(const std::map<std::string, double>& values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// Renders as a sum; `needs_parens` reports whether the result must be
  /// parenthesized when used as a product factor.
  std::string to_string(bool* needs_parens = nullptr) const;

 private:
  Terms terms_;
};

/// Monic greatest common divisor (leading coefficient 1 in graded-lex order).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Graded-lex comparison used to pick leading monomials.
bool graded_less(const Exponents& a, const Exponents& b);

}  // namespace logcorners

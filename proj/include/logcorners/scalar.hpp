#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

#include "logcorners/rational_function.hpp"

namespace logcorners {

/// Monomial in the transcendental symbols: pi^pi_degree * prod L(name)^k.
/// L-symbols are keyed by positive-parameter names or by decimal primes
/// ("2", "3", ...) for logarithms of rational constants.
struct TranscendentalMonomial {
  int pi_degree = 0;
  Exponents logs;

  friend bool operator==(const TranscendentalMonomial&, const TranscendentalMonomial&) = default;
  friend auto operator<=>(const TranscendentalMonomial&, const TranscendentalMonomial&) = default;
};

/// Exact constant: element of Q(i)(sigma)[pi, L_1..L_m]. pi, i and the L's are
/// independent symbols; nothing is simplified through numeric identities.
class Scalar {
 public:
  using Terms = std::map<TranscendentalMonomial, RationalFunction>;

  Scalar() = default;
  Scalar(RationalFunction c);  // NOLINT(google-explicit-constructor)
  Scalar(long c) : Scalar(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational c) : Scalar(RationalFunction(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  static Scalar i() { return {GaussRational::i()}; }
  static Scalar pi();
  /// Positive parameter sigma.
  static Scalar parameter(const std::string& name);
  /// L(name) = log(name) for a parameter or a prime.
  static Scalar log_symbol(const std::string& name);
  /// Logarithm of a positive rational, expanded over prime L-symbols.
  static Scalar log_rational(const mpq_class& q);
  static Scalar rational(long num, long den = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the value lies in Q(i)(sigma) (no pi, no logs).
  bool is_rational_function() const;
  RationalFunction as_rational_function() const;
  /// True when the value is a plain element of Q(i).
  bool is_number() const;
  GaussRational as_number() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar pow(int n) const;
  /// Division is only defined by elements of Q(i)(sigma)^*.
  Scalar divided_by(const Scalar& d) const;

  /// Complex conjugation; parameters (and their L-symbols) are renamed by
  /// `conj_name`, which must be an involution.
  Scalar conjugated(const std::function<std::string(const std::string&)>& conj_name) const;
  /// Replace parameters by rational functions and L-symbols by scalars.
  Scalar substitute(const std::map<std::string, RationalFunction>& parameters,
                    const std::map<std::string, Scalar>& logs) const;

  /// Numeric value; prime L-symbols evaluate to log(p).
  std::complex<double> eval(const std::map<std::string, double>& parameters) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Text in the expression grammar, e.g. "2*pi*i*log(a) - 2*pi*i*log(lam)".
  std::string to_string() const;
  /// True when to_string() must be parenthesized inside a product.
  bool is_compound() const;

 private:
  void add_term(const TranscendentalMonomial& m, const RationalFunction& c);
  Terms terms_;
};

}  // namespace logcorners

#pragma once

#include <string>

#include "logcorners/coefficient.hpp"

namespace logcorners {

/// Section c * sigma^E * e^q * r^J * t^K of the positive log monoid of a chart.
/// Phantom exactly when K is nonzero.
struct MonoidElement {
  mpq_class c = 1;
  Exponents sigma;
  FourierPoly q;
  Exponents r;
  Exponents t;

  static MonoidElement constant(const mpq_class& c, const Exponents& sigma = {});
  static MonoidElement parameter(const std::string& name, int power = 1);
  static MonoidElement basic(const std::string& r, int power = 1);
  static MonoidElement phantom(const std::string& t, int power = 1);
  static MonoidElement exponential(const FourierPoly& q);

  bool is_phantom() const { return !t.empty(); }
  bool is_basic() const { return t.empty(); }
  /// c * sigma^E only.
  bool is_constant() const { return q.is_zero() && r.empty() && t.empty(); }
  bool is_one() const { return is_constant() && c == 1 && sigma.empty(); }

  /// c * sigma^E as an exact Scalar.
  Scalar constant_value() const;
  /// log c + sum E_j L_j.
  Scalar log_constant() const;
  /// Underlying function: 0 for phantoms, otherwise c sigma^E e^q r^J.
  Coefficient alpha() const;

  MonoidElement operator*(const MonoidElement& o) const;
  MonoidElement pow(int n) const;
  /// Inverse of a unit (no r or t factors).
  MonoidElement inverse() const;

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

  std::string to_string() const;
};

}  // namespace logcorners

#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "logcorners/morphism.hpp"

namespace logcorners {

/// Log-degree vector over basic and phantom coordinates -> coefficient.
using LogTerms = std::map<Exponents, Coefficient>;

class LogForm;

/// Finite sum of Coefficient * log^I(r) * log^J(t) on a chart.
class LogFunction {
 public:
  LogFunction() = default;
  explicit LogFunction(Chart chart) : chart_(std::move(chart)) {}
  LogFunction(Chart chart, const Coefficient& c);
  LogFunction(Chart chart, LogTerms terms);

  /// log of a basic or phantom coordinate.
  static LogFunction log_coordinate(const Chart& chart, const std::string& name);

  const Chart& chart() const { return chart_; }
  const LogTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar as_constant() const;
  /// Highest power of log(name).
  int log_degree(const std::string& name) const;
  bool has_phantom_logs() const;

  LogFunction operator-() const;
  LogFunction& operator+=(const LogFunction& o);
  LogFunction& operator-=(const LogFunction& o);
  friend LogFunction operator+(LogFunction a, const LogFunction& b) { return a += b; }
  friend LogFunction operator-(LogFunction a, const LogFunction& b) { return a -= b; }
  friend LogFunction operator*(const LogFunction& a, const LogFunction& b);
  LogFunction scaled(const Scalar& c) const;
  LogFunction times(const Coefficient& c) const;
  LogFunction pow(int n) const;

  /// Numeric value at an interior point; phantom logs have no value.
  std::complex<double> eval(const Point& coords, const Point& params) const;

  friend bool operator==(const LogFunction& a, const LogFunction& b) = default;

  std::string to_string() const;

  void add(const Exponents& logs, const Coefficient& c);

 private:
  Chart chart_;
  LogTerms terms_;
};

/// Ordered set of basis coordinates; dx for free, dlog for basic and phantom,
/// dtheta for angular coordinates. Stored in chart order.
using Basis = std::vector<std::string>;

/// Sum of LogFunction coefficients times wedge products of basis one-forms.
class LogForm {
 public:
  using Terms = std::map<Basis, LogTerms>;

  LogForm() = default;
  explicit LogForm(Chart chart) : chart_(std::move(chart)) {}
  LogForm(const LogFunction& f);  // NOLINT(google-explicit-constructor)
  /// Single basis one-form (dx, dlog r, dlog t or dtheta) of a coordinate.
  static LogForm basis(const Chart& chart, const std::string& name);
  static LogForm from_terms(Chart chart, Terms terms);

  const Chart& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common degree of all terms; 0 for the zero form; throws when mixed.
  int degree() const;
  bool is_homogeneous() const;
  /// Component of a given degree.
  LogForm component(int degree) const;
  /// Coefficient function of a basis monomial.
  LogFunction coefficient(const Basis& b) const;
  bool has_phantom_logs() const;

  LogForm operator-() const;
  LogForm& operator+=(const LogForm& o);
  LogForm& operator-=(const LogForm& o);
  friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
  friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
  LogForm scaled(const Scalar& c) const;
  LogForm times(const LogFunction& f) const;

  friend bool operator==(const LogForm& a, const LogForm& b) = default;

  std::string to_string() const;

  void add(const Basis& b, const Exponents& logs, const Coefficient& c);

 private:
  Chart chart_;
  Terms terms_;
};

LogFunction log_of(const Chart& chart, const MonoidElement& m);

LogForm d(const LogFunction& f);
LogForm d(const LogForm& w);
LogForm wedge(const LogForm& a, const LogForm& b);

LogFunction pullback(const WeakMorphism& f, const LogFunction& g);
LogForm pullback(const WeakMorphism& f, const LogForm& w);

/// Sorts a basis into chart order; returns the permutation sign or 0 on repeats.
int canonical_basis(const Chart& chart, Basis& b);

void require_same_chart(const Chart& a, const Chart& b);

}  // namespace logcorners

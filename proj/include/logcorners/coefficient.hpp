#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "logcorners/scalar.hpp"

namespace logcorners {

/// Monomial key of a Fourier polynomial: powers of x/r coordinates and
/// integer frequencies e^{i k theta} of angular coordinates.
struct FourierKey {
  Exponents mono;
  Exponents fourier;

  friend bool operator==(const FourierKey&, const FourierKey&) = default;
  friend auto operator<=>(const FourierKey&, const FourierKey&) = default;
};

/// Angular substitution theta -> sign*theta' + quarter_turns*pi/2.
struct AngleAssign {
  int sign = 1;
  std::optional<std::string> source;
  int quarter_turns = 0;

  friend bool operator==(const AngleAssign&, const AngleAssign&) = default;
};

using Point = std::map<std::string, double>;

/// Polynomial in x, r with Scalar coefficients, times Fourier monomials in theta.
class FourierPoly {
 public:
  using Terms = std::map<FourierKey, Scalar>;

  FourierPoly() = default;
  FourierPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  FourierPoly(long c) : FourierPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static FourierPoly variable(const std::string& name, int power = 1);
  static FourierPoly wave(const std::string& theta, int k);
  static FourierPoly term(FourierKey key, Scalar c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  FourierPoly without_constant() const;
  /// Highest power of the polynomial variable `name`.
  int degree(const std::string& name) const;
  bool depends_on(const std::string& name) const;

  FourierPoly operator-() const;
  FourierPoly& operator+=(const FourierPoly& o);
  FourierPoly& operator-=(const FourierPoly& o);
  friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
  friend FourierPoly operator-(FourierPoly a, const FourierPoly& b) { return a -= b; }
  friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b);
  FourierPoly scaled(const Scalar& c) const;
  FourierPoly pow(int n) const;

  FourierPoly diff(const std::string& name) const;
  FourierPoly substitute(const std::map<std::string, FourierPoly>& vars,
                         const std::map<std::string, AngleAssign>& angles) const;
  /// Apply a map to every Scalar coefficient.
  template <class F>
  FourierPoly map_scalars(F&& f) const {
    FourierPoly out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  std::complex<double> eval(const Point& coords, const Point& params) const;

  friend bool operator==(const FourierPoly&, const FourierPoly&) = default;
  friend std::strong_ordering operator<=>(const FourierPoly& a, const FourierPoly& b) {
    return a.terms_ <=> b.terms_;
  }

  std::string to_string(bool* compound = nullptr) const;

  void add(const FourierKey& k, const Scalar& c);

 private:
  Terms terms_;
};

/// Element of the coefficient ring: finite sum of e^{q} * P with q a
/// FourierPoly without constant term and P a FourierPoly.
class Coefficient {
 public:
  using Terms = std::map<FourierPoly, FourierPoly>;

  Coefficient() = default;
  Coefficient(FourierPoly p);  // NOLINT(google-explicit-constructor)
  Coefficient(Scalar c) : Coefficient(FourierPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long c) : Coefficient(FourierPoly(c)) {}  // NOLINT(google-explicit-constructor)
  static Coefficient variable(const std::string& name, int power = 1);
  /// e^{q}; a nonzero constant part of q has no exact representation.
  static Coefficient exp(const FourierPoly& q);
  static Coefficient exp_times(const FourierPoly& q, const FourierPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// No exp factors.
  bool is_polynomial() const;
  FourierPoly as_polynomial() const;
  bool is_constant() const;
  Scalar as_constant() const;
  bool depends_on(const std::string& name) const;
  bool exp_depends_on(const std::string& name) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient scaled(const Scalar& c) const;
  Coefficient pow(int n) const;

  Coefficient diff(const std::string& name) const;
  Coefficient substitute(const std::map<std::string, Coefficient>& vars,
                         const std::map<std::string, AngleAssign>& angles = {}) const;
  Coefficient at_zero(const std::string& name) const;
  /// True when every term carries at least one factor of `name`.
  bool divisible_by(const std::string& name) const;
  /// Exact quotient by `name`; throws when not divisible.
  Coefficient divided_by_variable(const std::string& name) const;

  template <class F>
  Coefficient map_scalars(F&& f) const {
    Coefficient out;
    for (const auto& [q, p] : terms_) out.add(q.map_scalars(f), p.map_scalars(f));
    return out;
  }

  std::complex<double> eval(const Point& coords, const Point& params) const;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    return a.terms_ <=> b.terms_;
  }

  std::string to_string(bool* compound = nullptr) const;

  void add(const FourierPoly& q, const FourierPoly& p);

 private:
  Terms terms_;
};

}  // namespace logcorners

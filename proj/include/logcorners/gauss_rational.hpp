#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <map>
#include <string>

namespace logcorners {

/// Sparse exponent vector keyed by symbol name. Zero entries are never stored.
using Exponents = std::map<std::string, int>;

Exponents add_exponents(const Exponents& a, const Exponents& b);
Exponents scale_exponents(const Exponents& a, int k);
int total_degree(const Exponents& e);

/// Element of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational i() { return {0, 1}; }
  static GaussRational from_string(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2", "-i", "(1+2*i)": a product factor that re-parses to the same value.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace logcorners

#include "logcorners/gauss_rational.hpp"

#include "logcorners/error.hpp"

namespace logcorners {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out = a;
  for (const auto& [name, e] : b) {
    int v = (out[name] += e);
    if (v == 0) out.erase(name);
  }
  return out;
}

Exponents scale_exponents(const Exponents& a, int k) {
  if (k == 0) return {};
  Exponents out;
  for (const auto& [name, e] : a) out.emplace(name, e * k);
  return out;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (const auto& [_, v] : e) d += v;
  return d;
}

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("invalid rational literal '" + text + "'");
  q.canonicalize();
  return {q};
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string sep = sgn(im_) > 0 ? "+" : "";
  return "(" + re_.get_str() + sep + imag + ")";
}

}  // namespace logcorners

#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace darboux {

/// Exact Gaussian rational re + im*i with GMP rationals in lowest terms.
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussQ i() { return GaussQ(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integral() const;

  GaussQ conj() const { return GaussQ(re_, -im_); }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussQ operator-() const { return GaussQ(-re_, -im_); }
  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  /// Throws std::domain_error on division by zero.
  GaussQ& operator/=(const GaussQ& o);

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Arbitrary but total order (real part first), used for canonical sorting.
  friend std::strong_ordering operator<=>(const GaussQ& a, const GaussQ& b);

  /// Expression-grammar rendering: "3/2", "-I", "2/3*I", "(1 + 2*I)".
  std::string to_string() const;
  /// True when to_string() needs no parentheses to act as a product factor.
  bool prints_as_single_factor() const { return is_real() || sgn(re_) == 0; }

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussQ& v);

}  // namespace darboux

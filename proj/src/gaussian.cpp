#include "darboux/gaussian.hpp"

#include <stdexcept>

namespace darboux {

bool GaussQ::is_integral() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::strong_ordering operator<=>(const GaussQ& a, const GaussQ& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.im_, b.im_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GaussQ::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [](const mpq_class& q) -> std::string {
    if (q == 1) return "I";
    if (q == -1) return "-I";
    return q.get_str() + "*I";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string out = "(" + re_.get_str();
  if (sgn(im_) < 0) {
    out += " - " + imag(-im_);
  } else {
    out += " + " + imag(im_);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussQ& v) { return os << v.to_string(); }

}  // namespace darboux

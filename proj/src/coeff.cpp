#include "darboux/coeff.hpp"

#include <stdexcept>

namespace darboux {

namespace {

ParamMono mono_gcd(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  auto j = b.begin();
  for (const auto& [s, e] : a) {
    while (j != b.end() && j->first < s) ++j;
    if (j != b.end() && j->first == s) out.emplace_back(s, std::min(e, j->second));
  }
  return out;
}

CoeffValue eval_param_poly(const ParamPoly& p, const ParamBindings& bindings) {
  CoeffValue acc;
  for (const auto& t : p.terms()) {
    CoeffValue term(t.coeff);
    for (const auto& [s, e] : t.mono) {
      auto it = bindings.find(s.name());
      const CoeffValue base = it == bindings.end() ? CoeffValue::param(s.name()) : it->second;
      for (unsigned k = 0; k < e; ++k) term *= base;
    }
    acc += term;
  }
  return acc;
}

}  // namespace

CoeffValue::CoeffValue(ParamPoly num, ParamPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CoeffValue CoeffValue::fraction(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("coefficient with zero denominator");
  return CoeffValue(std::move(num), std::move(den), true);
}

void CoeffValue::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.constant_value().is_one()) {
      num_ = num_.scaled(GaussQ(1) / den_.constant_value());
      den_ = ParamPoly(1);
    }
    return;
  }
  const ParamMono g = mono_gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.empty()) {
    num_ = num_.divide_mono(g);
    den_ = den_.divide_mono(g);
  }
  if (!den_.is_constant() && !den_.is_monomial()) {
    if (auto q = num_.exact_div(den_)) {
      num_ = std::move(*q);
      den_ = ParamPoly(1);
      return;
    }
    if (!num_.is_constant()) {
      if (auto q = den_.exact_div(num_)) {
        den_ = std::move(*q);
        num_ = ParamPoly(1);
      }
    }
  }
  const GaussQ lc = den_.leading().coeff;
  if (!lc.is_one()) {
    const GaussQ inv = GaussQ(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<GaussQ> CoeffValue::as_gaussian() const {
  if (has_parameters()) return std::nullopt;
  return num_.constant_value() / den_.constant_value();
}

std::set<std::string> CoeffValue::parameters() const {
  auto out = num_.variables();
  auto d = den_.variables();
  out.insert(d.begin(), d.end());
  return out;
}

CoeffValue CoeffValue::operator-() const {
  CoeffValue r = *this;
  r.num_ = -r.num_;
  return r;
}

CoeffValue& CoeffValue::operator+=(const CoeffValue& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else if (o.den_.is_constant()) {
    num_ = num_ + o.num_ * den_;
  } else if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
  } else if (auto q = den_.exact_div(o.den_)) {
    num_ = num_ + o.num_ * *q;
  } else if (auto r = o.den_.exact_div(den_)) {
    num_ = num_ * *r + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

CoeffValue& CoeffValue::operator-=(const CoeffValue& o) { return *this += -o; }

CoeffValue& CoeffValue::operator*=(const CoeffValue& o) {
  if (is_zero() || o.is_zero()) return *this = CoeffValue();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  ParamPoly a = num_;
  ParamPoly b = den_;
  ParamPoly c = o.num_;
  ParamPoly d = o.den_;
  if (!b.is_constant() && !b.is_monomial()) {
    if (auto q = c.exact_div(b)) {
      c = std::move(*q);
      b = ParamPoly(1);
    }
  }
  if (!d.is_constant() && !d.is_monomial()) {
    if (auto q = a.exact_div(d)) {
      a = std::move(*q);
      d = ParamPoly(1);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

CoeffValue& CoeffValue::operator/=(const CoeffValue& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  CoeffValue inv(o.den_, o.num_, true);
  return *this *= inv;
}

bool operator==(const CoeffValue& a, const CoeffValue& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

CoeffValue CoeffValue::conj() const { return CoeffValue(num_.conj(), den_.conj(), true); }

CoeffValue CoeffValue::real_part() const {
  if (den_.is_real()) return CoeffValue(num_.real_part(), den_, true);
  const ParamPoly n = num_ * den_.conj();
  return CoeffValue(n.real_part(), (den_ * den_.conj()).real_part(), true);
}

CoeffValue CoeffValue::imag_part() const {
  if (den_.is_real()) return CoeffValue(num_.imag_part(), den_, true);
  const ParamPoly n = num_ * den_.conj();
  return CoeffValue(n.imag_part(), (den_ * den_.conj()).real_part(), true);
}

CoeffValue CoeffValue::substitute(const ParamBindings& bindings) const {
  if (!has_parameters() || bindings.empty()) return *this;
  CoeffValue n = eval_param_poly(num_, bindings);
  CoeffValue d = eval_param_poly(den_, bindings);
  if (d.is_zero()) throw std::domain_error("parameter substitution makes a denominator vanish: " + den_.to_string());
  return n / d;
}

bool CoeffValue::prints_as_single_factor() const {
  return !(den_.is_constant() && num_.terms().size() > 1);
}

std::string CoeffValue::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.terms().size() == 1 ? num_.to_string() : "(" + num_.to_string() + ")";
  const bool bare_den = den_.is_monomial() && den_.leading().mono.size() == 1;
  return n + "/" + (bare_den ? den_.to_string() : "(" + den_.to_string() + ")");
}

std::ostream& operator<<(std::ostream& os, const CoeffValue& v) { return os << v.to_string(); }

}  // namespace darboux

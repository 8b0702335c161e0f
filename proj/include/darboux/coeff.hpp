#pragma once

#include "darboux/param_poly.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace darboux {

class CoeffValue;

/// Parameter name -> exact value, used to instantiate symbolic coefficients.
using ParamBindings = std::map<std::string, CoeffValue, std::less<>>;

/// Element of the coefficient field: a fraction num/den of parameter polynomials
/// over the Gaussian rationals.
///
/// Representation is normalized but not fully reduced (there is no multivariate
/// GCD): the denominator is monic, common monomial factors are removed, and a
/// denominator that divides the numerator exactly is cancelled. Equality is
/// decided by cross-multiplication, so it never depends on how far the
/// reduction got. Parameters are assumed real when taking real/imaginary parts.
class CoeffValue {
 public:
  CoeffValue() : den_(1) {}
  CoeffValue(long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
  CoeffValue(GaussQ v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  CoeffValue(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `den` is the zero polynomial.
  static CoeffValue fraction(ParamPoly num, ParamPoly den);
  static CoeffValue param(std::string_view name) { return CoeffValue(ParamPoly::symbol(name)); }
  static CoeffValue imaginary_unit() { return CoeffValue(GaussQ::i()); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }
  bool has_parameters() const { return !num_.is_constant() || !den_.is_constant(); }
  /// Gaussian rational value when parameter-free.
  std::optional<GaussQ> as_gaussian() const;
  /// True when the value is real for real parameter values (coefficients real).
  bool is_real() const { return num_.is_real() && den_.is_real(); }
  std::set<std::string> parameters() const;

  CoeffValue operator-() const;
  CoeffValue& operator+=(const CoeffValue& o);
  CoeffValue& operator-=(const CoeffValue& o);
  CoeffValue& operator*=(const CoeffValue& o);
  /// Throws std::domain_error when dividing by zero.
  CoeffValue& operator/=(const CoeffValue& o);
  friend CoeffValue operator+(CoeffValue a, const CoeffValue& b) { return a += b; }
  friend CoeffValue operator-(CoeffValue a, const CoeffValue& b) { return a -= b; }
  friend CoeffValue operator*(CoeffValue a, const CoeffValue& b) { return a *= b; }
  friend CoeffValue operator/(CoeffValue a, const CoeffValue& b) { return a /= b; }
  friend bool operator==(const CoeffValue& a, const CoeffValue& b);

  CoeffValue conj() const;
  CoeffValue real_part() const;
  CoeffValue imag_part() const;

  /// Substitutes parameters; throws std::domain_error if the denominator vanishes.
  CoeffValue substitute(const ParamBindings& bindings) const;

  /// Size measure used to prefer simple pivots.
  std::size_t complexity() const { return num_.terms().size() + den_.terms().size(); }

  std::string to_string() const;
  /// True when to_string() can be used as one factor of a product without parentheses.
  bool prints_as_single_factor() const;

 private:
  CoeffValue(ParamPoly num, ParamPoly den, bool /*normalize*/);
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

std::ostream& operator<<(std::ostream& os, const CoeffValue& v);

}  // namespace darboux

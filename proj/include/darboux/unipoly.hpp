#pragma once

#include "darboux/coeff.hpp"
#include "darboux/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

/// Raised when an operation needs concrete Gaussian-rational coefficients.
class ParametricInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial, coefficients from degree 0 upward.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::string var, std::vector<CoeffValue> coeffs);

  const std::string& variable() const { return var_; }
  const std::vector<CoeffValue>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  /// Precondition: nonzero.
  const CoeffValue& leading() const;
  CoeffValue coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : CoeffValue(); }
  bool has_parameters() const;

  CoeffValue evaluate(const CoeffValue& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const CoeffValue& k) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;
  /// Same polynomial as a MultiPoly over the single coordinate `variable()`.
  MultiPoly to_multipoly() const;

 private:
  void trim();

  std::string var_ = "t";
  std::vector<CoeffValue> c_;
};

/// Euclidean division over the coefficient field. Throws std::domain_error for b = 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct GaussianRoots {
  std::vector<std::pair<GaussQ, unsigned>> roots;  // sorted, with multiplicity
  UniPoly residual;                                // factor with no Gaussian-rational root
};

/// All Gaussian-rational roots with multiplicity, plus the unfactored residual.
/// Throws ParametricInput for parameter-bearing coefficients and
/// std::domain_error for the zero polynomial.
GaussianRoots gaussian_roots(const UniPoly& u);

}  // namespace darboux

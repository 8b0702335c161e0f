#pragma once

#include "darboux/ellipsoid.hpp"
#include "darboux/multipoly.hpp"

#include <optional>
#include <vector>

namespace darboux {

/// Polynomial vector field sum P_i d/dx_i; one component per coordinate.
class VectorField {
 public:
  /// Throws std::invalid_argument when the component count differs from the
  /// coordinate count, CoordinateMismatch when a component uses other coordinates.
  VectorField(Coordinates coords, std::vector<MultiPoly> components);

  const Coordinates& coordinates() const { return coords_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const MultiPoly& operator[](std::size_t i) const { return comps_[i]; }
  std::size_t size() const { return comps_.size(); }
  bool is_zero() const;
  bool has_parameters() const;
  VectorField instantiate(const ParamBindings& bindings) const;

 private:
  Coordinates coords_;
  std::vector<MultiPoly> comps_;
};

/// X(f) = sum P_i df/dx_i.
MultiPoly lie_derivative(const VectorField& x, const MultiPoly& f);
/// X^j(f), with X^0(f) = f.
MultiPoly lie_iterate(const VectorField& x, const MultiPoly& f, unsigned j);

struct DegreeVector {
  std::vector<Degree> m;       // per component, in coordinate order
  std::vector<Degree> sorted;  // non-increasing
  /// Some component is zero (its degree is minus infinity).
  bool has_zero_component() const;
  /// Largest component degree m_1; throws std::logic_error for the zero field.
  int m1() const;
  std::vector<int> finite_sorted() const;
};
DegreeVector degree_vector(const VectorField& x);

/// Either X(M) = multiplier*M, or the nonzero normal form of X(M) as a witness.
struct OnSurfaceCertificate {
  std::optional<MultiPoly> multiplier;
  std::optional<MultiPoly> residual;
  bool on_surface() const { return multiplier.has_value(); }
};
OnSurfaceCertificate on_surface_check(const VectorField& x, const Ellipsoid& e);

}  // namespace darboux

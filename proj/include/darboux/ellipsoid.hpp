#pragma once

#include "darboux/multipoly.hpp"

#include <string>
#include <vector>

namespace darboux {

/// The ellipsoid sum x_i^2/a_i^2 = 1 in n+1 coordinates. Symbolic semi-axes
/// are assumed nonzero.
class Ellipsoid {
 public:
  /// Throws std::invalid_argument unless there are at least three coordinates,
  /// one nonzero semi-axis per coordinate.
  Ellipsoid(Coordinates coords, std::vector<CoeffValue> semi_axes);

  const Coordinates& coordinates() const { return coords_; }
  const std::vector<CoeffValue>& semi_axes() const { return axes_; }
  /// Dimension n of the surface (coordinate count minus one).
  std::size_t dimension() const { return coords_.size() - 1; }
  /// Defining polynomial M = sum x_i^2/a_i^2 - 1.
  const MultiPoly& defining_polynomial() const { return m_; }
  /// Right-hand side of the rewrite x_{n+1}^2 -> a_{n+1}^2 (1 - sum_{i<=n} x_i^2/a_i^2).
  const MultiPoly& last_square_rule() const { return rule_; }
  /// Assumptions made about symbolic data, e.g. "a != 0".
  std::vector<std::string> assumptions() const;
  Ellipsoid instantiate(const ParamBindings& bindings) const;

 private:
  Coordinates coords_;
  std::vector<CoeffValue> axes_;
  MultiPoly m_;
  MultiPoly rule_;
};

/// Rewrites every power var^k with k >= 2 using var^2 -> replacement; the
/// replacement must not involve var.
MultiPoly reduce_square(const MultiPoly& p, std::size_t var, const MultiPoly& replacement);

/// Canonical representative modulo <M>: degree at most 1 in the last coordinate.
MultiPoly normal_form(const MultiPoly& p, const Ellipsoid& e);
bool equal_on_surface(const MultiPoly& p, const MultiPoly& q, const Ellipsoid& e);

/// C(u, v), zero when u < v or v < 0.
unsigned long long binomial(long long u, long long v);
/// d(m) = C(n+m, n) - C(n+m-2, n), the dimension of degree <= m polynomials on the surface.
unsigned long long dim_on_surface(std::size_t n, unsigned m);

enum class Tangency {
  Transversal,
  Tangent,
  EmptyRealIntersection,
  /// Parametric data: tangency holds at most on a proper subvariety of parameter space.
  GenericallyTransversal,
};
std::string to_string(Tangency t);

/// Position of the hyperplane sum c_i x_i = d relative to the surface. With
/// s = sum a_i^2 c_i^2 the plane touches the (complex) surface exactly when
/// s = d^2 and d != 0. Throws std::invalid_argument for a zero normal vector.
Tangency hyperplane_tangency(const std::vector<CoeffValue>& c, const CoeffValue& d, const Ellipsoid& e);

}  // namespace darboux

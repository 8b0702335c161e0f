#include "darboux/vector_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace darboux {

VectorField::VectorField(Coordinates coords, std::vector<MultiPoly> components)
    : coords_(std::move(coords)), comps_(std::move(components)) {
  if (comps_.size() != coords_.size())
    throw std::invalid_argument("vector field has " + std::to_string(comps_.size()) + " components for " +
                                std::to_string(coords_.size()) + " coordinates");
  for (auto& p : comps_) {
    if (p.coordinates() == coords_) continue;
    if (!p.is_zero()) throw CoordinateMismatch("vector field component over different coordinates");
    p = MultiPoly(coords_);
  }
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool VectorField::has_parameters() const {
  return std::any_of(comps_.begin(), comps_.end(), [](const MultiPoly& p) { return p.has_parameters(); });
}

VectorField VectorField::instantiate(const ParamBindings& bindings) const {
  std::vector<MultiPoly> c;
  for (const auto& p : comps_) c.push_back(p.instantiate(bindings));
  return VectorField(coords_, std::move(c));
}

MultiPoly lie_derivative(const VectorField& x, const MultiPoly& f) {
  if (!(f.coordinates() == x.coordinates())) {
    if (f.is_zero()) return MultiPoly(x.coordinates());
    throw CoordinateMismatch("polynomial and vector field use different coordinates");
  }
  MultiPoly out(x.coordinates());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    MultiPoly d = diff(f, x.coordinates()[i]);
    if (!d.is_zero()) out += x[i] * d;
  }
  return out;
}

MultiPoly lie_iterate(const VectorField& x, const MultiPoly& f, unsigned j) {
  MultiPoly out = f;
  for (unsigned k = 0; k < j; ++k) out = lie_derivative(x, out);
  return out;
}

bool DegreeVector::has_zero_component() const {
  return std::any_of(m.begin(), m.end(), [](const Degree& d) { return d.is_minus_infinity(); });
}

int DegreeVector::m1() const {
  if (sorted.empty() || sorted.front().is_minus_infinity()) throw std::logic_error("degree of the zero vector field");
  return sorted.front().value();
}

std::vector<int> DegreeVector::finite_sorted() const {
  std::vector<int> out;
  for (const auto& d : sorted)
    if (!d.is_minus_infinity()) out.push_back(d.value());
  return out;
}

DegreeVector degree_vector(const VectorField& x) {
  DegreeVector dv;
  for (const auto& p : x.components()) dv.m.push_back(p.degree());
  dv.sorted = dv.m;
  std::sort(dv.sorted.begin(), dv.sorted.end(), [](const Degree& a, const Degree& b) { return a > b; });
  return dv;
}

OnSurfaceCertificate on_surface_check(const VectorField& x, const Ellipsoid& e) {
  if (x.size() != e.coordinates().size()) throw std::invalid_argument("vector field and ellipsoid dimensions differ");
  const MultiPoly& m = e.defining_polynomial();
  const MultiPoly xm = lie_derivative(x, m.embed(x.coordinates()));
  const MultiPoly m_here = m.embed(x.coordinates());
  OnSurfaceCertificate cert;
  auto [q, r] = divrem(xm, m_here);
  if (r.is_zero()) {
    cert.multiplier = std::move(q);
    return cert;
  }
  cert.residual = std::move(r);
  return cert;
}

}  // namespace darboux

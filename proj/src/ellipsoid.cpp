#include "darboux/ellipsoid.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace darboux {

Ellipsoid::Ellipsoid(Coordinates coords, std::vector<CoeffValue> semi_axes)
    : coords_(std::move(coords)), axes_(std::move(semi_axes)), m_(coords_), rule_(coords_) {
  if (coords_.size() < 3) throw std::invalid_argument("ellipsoid needs at least three coordinates (n >= 2)");
  if (axes_.size() != coords_.size())
    throw std::invalid_argument("expected " + std::to_string(coords_.size()) + " semi-axes, got " +
                                std::to_string(axes_.size()));
  for (const auto& a : axes_)
    if (a.is_zero()) throw std::invalid_argument("semi-axis is zero");

  const std::size_t last = coords_.size() - 1;
  MultiPoly rest = MultiPoly::constant(coords_, CoeffValue(1));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    Exponents e(coords_.size(), 0);
    e[i] = 2;
    const CoeffValue inv = CoeffValue(1) / (axes_[i] * axes_[i]);
    m_ += MultiPoly::monomial(coords_, e, inv);
    if (i != last) rest -= MultiPoly::monomial(coords_, e, inv);
  }
  m_ -= MultiPoly::constant(coords_, CoeffValue(1));
  rule_ = rest.scaled(axes_[last] * axes_[last]);
}

std::vector<std::string> Ellipsoid::assumptions() const {
  std::vector<std::string> out;
  for (const auto& a : axes_)
    if (a.has_parameters()) out.push_back(a.to_string() + " != 0");
  return out;
}

Ellipsoid Ellipsoid::instantiate(const ParamBindings& bindings) const {
  std::vector<CoeffValue> axes;
  for (const auto& a : axes_) axes.push_back(a.substitute(bindings));
  return Ellipsoid(coords_, std::move(axes));
}

MultiPoly reduce_square(const MultiPoly& p, std::size_t var, const MultiPoly& replacement) {
  const Coordinates& coords = p.coordinates();
  std::map<unsigned, MultiPoly> powers;
  auto power_of = [&](unsigned k) -> const MultiPoly& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    return powers.emplace(k, pow(replacement, k)).first->second;
  };
  MultiPoly out(coords);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] < 2) {
      out += MultiPoly::monomial(coords, e, c);
      continue;
    }
    Exponents kept = e;
    kept[var] = e[var] % 2;
    out += power_of(e[var] / 2).times_monomial(kept, c);
  }
  return out;
}

MultiPoly normal_form(const MultiPoly& p, const Ellipsoid& e) {
  if (!(p.coordinates() == e.coordinates())) {
    if (p.is_zero()) return MultiPoly(e.coordinates());
    throw CoordinateMismatch("polynomial and ellipsoid use different coordinates");
  }
  return reduce_square(p, e.coordinates().size() - 1, e.last_square_rule());
}

bool equal_on_surface(const MultiPoly& p, const MultiPoly& q, const Ellipsoid& e) {
  return normal_form(p - q, e).is_zero();
}

unsigned long long binomial(long long u, long long v) {
  if (v < 0 || u < v) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(v));
  if (!r.fits_ulong_p()) throw std::overflow_error("binomial coefficient overflows");
  return r.get_ui();
}

unsigned long long dim_on_surface(std::size_t n, unsigned m) {
  const auto nn = static_cast<long long>(n);
  return binomial(nn + m, nn) - binomial(nn + m - 2, nn);
}

std::string to_string(Tangency t) {
  switch (t) {
    case Tangency::Transversal: return "transversal";
    case Tangency::Tangent: return "tangent";
    case Tangency::EmptyRealIntersection: return "empty_intersection_over_reals";
    case Tangency::GenericallyTransversal: return "generically_transversal";
  }
  return "?";
}

Tangency hyperplane_tangency(const std::vector<CoeffValue>& c, const CoeffValue& d, const Ellipsoid& e) {
  if (c.size() != e.semi_axes().size()) throw std::invalid_argument("normal vector length differs from coordinate count");
  if (std::all_of(c.begin(), c.end(), [](const CoeffValue& v) { return v.is_zero(); }))
    throw std::invalid_argument("hyperplane with zero normal vector");
  CoeffValue s;
  for (std::size_t i = 0; i < c.size(); ++i) s += e.semi_axes()[i] * e.semi_axes()[i] * c[i] * c[i];
  const CoeffValue disc = s - d * d;
  if (d.is_zero()) return Tangency::Transversal;
  if (disc.is_zero()) return Tangency::Tangent;
  const auto g = disc.as_gaussian();
  if (!g) return Tangency::GenericallyTransversal;
  bool real = g->is_real() && d.is_real();
  for (std::size_t i = 0; real && i < c.size(); ++i) real = c[i].is_real() && e.semi_axes()[i].is_real();
  if (real && sgn(g->re()) < 0) return Tangency::EmptyRealIntersection;
  return Tangency::Transversal;
}

}  // namespace darboux

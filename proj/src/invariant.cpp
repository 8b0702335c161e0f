#include "darboux/invariant.hpp"

#include "darboux/det.hpp"
#include "darboux/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace darboux {

namespace {

void monomials_up_to(std::size_t vars, int degree, unsigned last_cap, std::vector<Exponents>& out) {
  Exponents e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    const int cap = i + 1 == vars ? std::min<int>(left, static_cast<int>(last_cap)) : left;
    for (int k = 0; k <= cap; ++k) {
      e[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

int default_bound(const VectorField& x) {
  if (x.is_zero()) return 0;
  return degree_vector(x).m1() - 1;
}

std::string fresh_name(const Coordinates& coords, std::string base) {
  while (coords.contains(base)) base += "_";
  return base;
}

Coordinates with_extra(const Coordinates& coords, const std::string& name) {
  std::vector<std::string> names = coords.names();
  names.push_back(name);
  return Coordinates(std::move(names));
}

// Coefficients of p, viewed as a polynomial in the other coordinates with
// coefficients in the coordinate `var`; their gcd.
UniPoly content_in(const MultiPoly& p, std::size_t var) {
  std::map<Exponents, std::vector<CoeffValue>> groups;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    auto& v = groups[rest];
    if (v.size() <= e[var]) v.resize(e[var] + 1);
    v[e[var]] = c;
  }
  const std::string& name = p.coordinates()[var];
  UniPoly g(name, {});
  for (auto& [rest, coeffs] : groups) g = gcd(g, UniPoly(name, std::move(coeffs)));
  return g;
}

bool has_form(const std::vector<MultiPoly>& list, const MultiPoly& f) {
  return std::any_of(list.begin(), list.end(), [&](const MultiPoly& g) { return g == f; });
}

void sort_found(std::vector<InvariantHypersurface>& found) {
  std::sort(found.begin(), found.end(), [](const InvariantHypersurface& a, const InvariantHypersurface& b) {
    return a.f.to_string() < b.f.to_string();
  });
}

void verify_candidates(const VectorField& x, const Ellipsoid& e, const std::vector<MultiPoly>& candidates,
                       PlaneSearch& out) {
  for (const auto& f : candidates) {
    InvarianceCheck c = invariance_check(x, f, &e);
    if (c.accepted()) {
      if (!out.extactic.degenerate && divides(f, out.extactic.ew))
        c.certificate->multiplicity = multiplicity(f, out.extactic.ew);
      out.found.push_back(std::move(*c.certificate));
    } else {
      out.rejected.push_back(f.to_string() + ": " + c.rejection);
    }
  }
  sort_found(out.found);
}

void add_roots(const UniPoly& g, std::vector<GaussQ>& roots, PlaneSearch& out) {
  if (g.is_zero() || g.degree() < Degree(1)) return;
  GaussianRoots r = gaussian_roots(g);
  for (const auto& [root, mult] : r.roots) {
    if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
  }
  if (r.residual.degree() >= Degree(1)) out.unresolved.push_back(r.residual);
}

}  // namespace

std::optional<MultiPoly> solve_multiplier(const MultiPoly& lhs, const MultiPoly& factor, int bound,
                                          const Ellipsoid* surface) {
  const Coordinates& coords = factor.coordinates();
  if (surface == nullptr) {
    auto [q, r] = divrem(lhs, factor);
    if (!r.is_zero() || q.degree() > Degree(bound)) return std::nullopt;
    return q;
  }
  const MultiPoly target = normal_form(lhs, *surface);
  if (bound < 0) return target.is_zero() ? std::optional<MultiPoly>(MultiPoly(coords)) : std::nullopt;
  std::vector<Exponents> unknowns;
  monomials_up_to(coords.size(), bound, 1, unknowns);
  std::vector<MultiPoly> columns;
  std::map<Exponents, std::size_t, GradedLexGreater> rows;
  for (const auto& [e, c] : target.terms()) rows.emplace(e, rows.size());
  for (const auto& mu : unknowns) {
    columns.push_back(normal_form(factor.times_monomial(mu, CoeffValue(1)), *surface));
    for (const auto& [e, c] : columns.back().terms()) rows.emplace(e, rows.size());
  }
  Matrix a(rows.size(), std::vector<CoeffValue>(unknowns.size()));
  std::vector<CoeffValue> b(rows.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [e, c] : columns[j].terms()) a[rows.at(e)][j] = c;
  for (const auto& [e, c] : target.terms()) b[rows.at(e)] = c;
  auto sol = solve(a, b, unknowns.size());
  if (!sol) return std::nullopt;
  MultiPoly k(coords);
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    if (!(*sol)[j].is_zero()) k += MultiPoly::monomial(coords, unknowns[j], (*sol)[j]);
  return k;
}

std::optional<Cofactor> cofactor_solve(const VectorField& x, const MultiPoly& f, const Ellipsoid* surface,
                                       std::optional<int> degree_bound) {
  if (f.is_zero()) throw std::invalid_argument("cofactor of the zero polynomial");
  if (surface != nullptr && normal_form(f, *surface).is_zero())
    throw std::invalid_argument("polynomial vanishes identically on the surface");
  const int bound = degree_bound.value_or(default_bound(x));
  auto k = solve_multiplier(lie_derivative(x, f), f, bound, surface);
  if (!k) return std::nullopt;
  return Cofactor{std::move(*k), bound, surface != nullptr};
}

std::string to_string(Transversality t) {
  switch (t) {
    case Transversality::Verified: return "verified";
    case Transversality::TangentRejected: return "tangent_rejected";
    case Transversality::Unchecked: return "unchecked";
  }
  return "?";
}

InvarianceCheck invariance_check(const VectorField& x, const MultiPoly& f, const Ellipsoid* surface,
                                 std::optional<int> degree_bound) {
  InvarianceCheck out;
  auto cof = cofactor_solve(x, f, surface, degree_bound);
  if (!cof) {
    out.rejection = "no cofactor of degree <= " + std::to_string(degree_bound.value_or(default_bound(x)));
    return out;
  }
  MultiPoly check = lie_derivative(x, f) - cof->k * f;
  if (surface != nullptr) check = normal_form(check, *surface);
  if (!check.is_zero()) throw std::logic_error("cofactor failed re-verification for " + f.to_string());

  InvariantHypersurface h{f, std::move(*cof), Transversality::Unchecked, std::nullopt, std::nullopt};
  if (surface != nullptr && f.degree() == Degree(1)) {
    const LinearForm lf = *as_linear_form(f);
    h.tangency = hyperplane_tangency(lf.coefficients, -lf.constant, *surface);
    if (*h.tangency == Tangency::Tangent) {
      h.transversality = Transversality::TangentRejected;
      out.rejection = "hyperplane is tangent to the ellipsoid";
    } else {
      h.transversality = Transversality::Verified;
    }
  }
  out.certificate = std::move(h);
  return out;
}

ExpFactorCheck exp_factor_check(const VectorField& x, const MultiPoly& g, const MultiPoly& h,
                                const Ellipsoid* surface) {
  if (h.is_zero()) throw std::invalid_argument("exponential factor with zero denominator");
  ExpFactorCheck out;
  const MultiPoly lhs = h * lie_derivative(x, g) - g * lie_derivative(x, h);
  const int m1_bound = default_bound(x);
  const int bound = std::max(m1_bound, lhs.is_zero() ? 0 : lhs.degree().value());
  auto l = solve_multiplier(lhs, h * h, bound, surface);
  if (!l) {
    out.rejection = "h X(g) - g X(h) is not a multiple of h^2";
    return out;
  }
  ExponentialFactor ef{g, h, *l, l->degree() <= Degree(m1_bound)};
  out.factor = std::move(ef);
  return out;
}

ExtacticReport extactic(const VectorField& x, const std::vector<MultiPoly>& basis,
                        const std::vector<MultiPoly>& candidates) {
  if (basis.empty()) throw std::invalid_argument("extactic needs a nonempty basis");
  const Coordinates& coords = x.coordinates();
  std::vector<MultiPoly> w;
  for (const auto& v : basis) {
    if (v.coordinates() == coords) {
      w.push_back(v);
    } else if (v.is_zero()) {
      w.emplace_back(coords);
    } else {
      throw CoordinateMismatch("basis element over different coordinates");
    }
  }
  const std::size_t l = w.size();

  std::map<Exponents, std::size_t, GradedLexGreater> monos;
  for (const auto& v : w)
    for (const auto& [e, c] : v.terms()) monos.emplace(e, monos.size());
  Matrix coeffs(monos.size(), std::vector<CoeffValue>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (const auto& [e, c] : w[i].terms()) coeffs[monos.at(e)][i] = c;
  if (rank(coeffs) < l) {
    auto rel = nullspace(coeffs, l);
    throw DependentBasis("extactic basis is linearly dependent", rel.front());
  }

  PolyMatrix m(l, std::vector<MultiPoly>(l));
  for (std::size_t i = 0; i < l; ++i) {
    MultiPoly cur = w[i];
    for (std::size_t j = 0; j < l; ++j) {
      if (j > 0) cur = lie_derivative(x, cur);
      m[j][i] = cur;
    }
  }
  ExtacticReport r;
  r.basis = w;
  r.ew = determinant(m);
  r.degenerate = r.ew.is_zero();
  r.residual = r.ew;
  if (r.degenerate) return r;

  std::vector<MultiPoly> tried;
  std::vector<MultiPoly> pool;
  for (std::size_t i = 0; i < coords.size(); ++i) pool.push_back(MultiPoly::variable(coords, coords[i]));
  for (const auto& c : candidates) {
    if (c.coordinates() == coords && !c.is_constant()) pool.push_back(c);
  }
  for (const auto& f : pool) {
    if (has_form(tried, f)) continue;
    tried.push_back(f);
    unsigned k = 0;
    while (true) {
      auto [q, rem] = divrem(r.residual, f);
      if (!rem.is_zero()) break;
      r.residual = std::move(q);
      ++k;
    }
    if (k > 0) r.factors_found.push_back({f, k});
  }
  return r;
}

unsigned multiplicity(const MultiPoly& f, const MultiPoly& ew) {
  if (ew.is_zero()) throw std::invalid_argument("multiplicity in a vanishing extactic polynomial");
  if (f.is_constant()) throw std::invalid_argument("multiplicity of a constant");
  unsigned k = 0;
  MultiPoly cur = ew;
  while (true) {
    auto [q, r] = divrem(cur, f);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++k;
  }
  if (k == 0) throw std::invalid_argument(f.to_string() + " does not divide the extactic polynomial");
  return k;
}

unsigned multiplicity(const MultiPoly& f, const ExtacticReport& report) {
  if (report.degenerate) throw std::invalid_argument("multiplicity in a degenerate extactic report");
  return multiplicity(f, report.ew);
}

NotOnSurface::NotOnSurface(MultiPoly r)
    : std::invalid_argument("vector field is not tangent to the ellipsoid; normal form of X(M) = " + r.to_string()),
      residual(std::move(r)) {}

MultiPoly normalize_linear_form(const MultiPoly& f) {
  auto lf = as_linear_form(f);
  if (!lf) throw std::invalid_argument("not a linear form: " + f.to_string());
  for (const auto& c : lf->coefficients) {
    if (!c.is_zero()) return f.scaled(CoeffValue(1) / c);
  }
  throw std::invalid_argument("linear form without variables: " + f.to_string());
}

PlaneSearch find_meridians(const VectorField& x, const Ellipsoid& e, const std::vector<MultiPoly>& candidates) {
  if (!(x.coordinates() == e.coordinates())) throw CoordinateMismatch("vector field and ellipsoid coordinates differ");
  OnSurfaceCertificate cert = on_surface_check(x, e);
  if (!cert.on_surface()) throw NotOnSurface(*cert.residual);
  const Coordinates& coords = x.coordinates();
  const std::size_t n = e.dimension();

  PlaneSearch out;
  std::vector<MultiPoly> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(MultiPoly::variable(coords, coords[i]));
  out.extactic = extactic(x, w, candidates);
  out.reduced = normal_form(out.extactic.ew, e);
  if (!x.is_zero()) out.bound = bound_meridians(n, degree_vector(x).finite_sorted());

  std::vector<MultiPoly> forms;
  auto add_form = [&](const MultiPoly& f) {
    MultiPoly g = normalize_linear_form(f);
    if (!has_form(forms, g)) forms.push_back(std::move(g));
  };
  for (const auto& c : candidates) {
    auto lf = as_linear_form(c);
    bool meridian = lf && lf->constant.is_zero() && lf->coefficients[n].is_zero();
    if (meridian) {
      meridian = std::any_of(lf->coefficients.begin(), lf->coefficients.end(),
                             [](const CoeffValue& v) { return !v.is_zero(); });
    }
    if (!meridian) {
      out.rejected.push_back(c.to_string() + ": not a hyperplane through the " + coords[n] + "-axis");
      continue;
    }
    add_form(c);
  }

  if (out.extactic.degenerate) {
    out.degenerate = true;
    out.note = "extactic polynomial vanishes identically: not finitely many invariant meridians";
  } else if (n != 2) {
    out.note = "pencil search is implemented for n = 2; only supplied candidates were verified";
  } else if (out.extactic.ew.has_parameters()) {
    out.note = "coefficients carry parameters; instantiate them to search the pencil, supplied candidates verified";
  } else {
    out.searched = true;
    const std::string t = fresh_name(coords, "t");
    const Coordinates ext = with_extra(coords, t);
    const std::size_t ti = ext.size() - 1;
    const MultiPoly tx = MultiPoly::variable(ext, t) * MultiPoly::variable(ext, coords[0]);
    std::vector<GaussQ> roots;
    for (const MultiPoly* p : {&out.extactic.ew, &out.reduced}) {
      if (p->is_zero()) continue;
      const MultiPoly s = subst(p->embed(ext), {{coords[1], tx}});
      add_roots(content_in(s, ti), roots, out);
    }
    std::sort(roots.begin(), roots.end());
    const MultiPoly xv = MultiPoly::variable(coords, coords[0]);
    const MultiPoly yv = MultiPoly::variable(coords, coords[1]);
    add_form(xv);
    add_form(yv);
    for (const auto& r : roots) add_form(yv - xv.scaled(CoeffValue(r)));
  }

  verify_candidates(x, e, forms, out);
  if (out.bound.value) out.within_bound = out.found.size() <= *out.bound.value;
  return out;
}

PlaneSearch find_parallels(const VectorField& x, const Ellipsoid& e, const std::vector<MultiPoly>& candidates) {
  if (!(x.coordinates() == e.coordinates())) throw CoordinateMismatch("vector field and ellipsoid coordinates differ");
  OnSurfaceCertificate cert = on_surface_check(x, e);
  if (!cert.on_surface()) throw NotOnSurface(*cert.residual);
  const Coordinates& coords = x.coordinates();
  const std::size_t last = coords.size() - 1;
  const MultiPoly zv = MultiPoly::variable(coords, coords[last]);

  PlaneSearch out;
  out.extactic = extactic(x, {MultiPoly::constant(coords, CoeffValue(1)), zv}, candidates);
  out.reduced = normal_form(out.extactic.ew, e);
  out.bound = bound_parallels(degree_vector(x));

  std::vector<MultiPoly> forms;
  auto add_form = [&](const MultiPoly& f) {
    MultiPoly g = normalize_linear_form(f);
    if (!has_form(forms, g)) forms.push_back(std::move(g));
  };
  for (const auto& c : candidates) {
    auto lf = as_linear_form(c);
    bool parallel = lf && !lf->coefficients[last].is_zero();
    for (std::size_t i = 0; parallel && i < last; ++i) parallel = lf->coefficients[i].is_zero();
    if (!parallel) {
      out.rejected.push_back(c.to_string() + ": not of the form " + coords[last] + " = constant");
      continue;
    }
    add_form(c);
  }

  if (out.reduced.is_zero()) {
    out.degenerate = true;
    out.note = "the " + coords[last] + "-component vanishes on the surface: every parallel is invariant";
  } else if (out.reduced.has_parameters()) {
    out.note = "coefficients carry parameters; instantiate them to search for parallels, supplied candidates verified";
  } else {
    out.searched = true;
    const std::string s = fresh_name(coords, "s");
    const Coordinates ext = with_extra(coords, s);
    const std::size_t si = ext.size() - 1;
    const MultiPoly sv = MultiPoly::variable(ext, s);
    MultiPoly on_slice = subst(out.reduced.embed(ext), {{coords[last], sv}});
    // On {x_{n+1} = s} the surface is sum_{i<=n} x_i^2/a_i^2 = 1 - s^2/a_{n+1}^2.
    const auto& axes = e.semi_axes();
    MultiPoly rest = MultiPoly::constant(ext, CoeffValue(1));
    for (std::size_t i = 0; i + 1 < last; ++i) {
      Exponents ei(ext.size(), 0);
      ei[i] = 2;
      rest -= MultiPoly::monomial(ext, ei, CoeffValue(1) / (axes[i] * axes[i]));
    }
    rest -= (sv * sv).scaled(CoeffValue(1) / (axes[last] * axes[last]));
    on_slice = reduce_square(on_slice, last - 1, rest.scaled(axes[last - 1] * axes[last - 1]));
    UniPoly g = content_in(on_slice, si);
    if (g.is_zero()) {
      out.degenerate = true;
      out.note = "the " + coords[last] + "-component vanishes on every slice: every parallel is invariant";
    } else {
      std::vector<GaussQ> roots;
      add_roots(g, roots, out);
      std::sort(roots.begin(), roots.end());
      for (const auto& r : roots) add_form(zv - MultiPoly::constant(coords, CoeffValue(r)));
    }
  }

  verify_candidates(x, e, forms, out);
  if (out.bound.value) out.within_bound = out.found.size() <= *out.bound.value;
  return out;
}

std::vector<InvariantHypersurface> real_planes(const PlaneSearch& s) {
  std::vector<InvariantHypersurface> out;
  for (const auto& h : s.found) {
    const bool real = std::all_of(h.f.terms().begin(), h.f.terms().end(),
                                  [](const auto& t) { return t.second.is_real(); });
    if (real) out.push_back(h);
  }
  return out;
}

}  // namespace darboux

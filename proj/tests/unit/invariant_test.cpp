#include "darboux/invariant.hpp"
#include "darboux/system_file.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <random>

using namespace darboux;

namespace {

LoadedSystem loaded(const std::string& name, const std::string& bind = "") {
  LoadedSystem s = load_system(name);
  if (!bind.empty()) s = s.instantiated(parse_bindings(bind, s.context.parameters));
  return s;
}

std::vector<std::string> forms(const PlaneSearch& ps) {
  std::vector<std::string> out;
  for (const auto& h : ps.found) out.push_back(h.f.to_string());
  return out;
}

}  // namespace

TEST_CASE("cofactors of the meridians of the complex-meridian system") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("pp0");
  auto k1 = cofactor_solve(s.field, r("-I*b*x + a*y"));
  REQUIRE(k1.has_value());
  CHECK(k1->k == r("(a*k2*x - I*a020*b*y)/a"));
  CHECK(k1->degree_bound == 1);
  CHECK_FALSE(k1->on_surface);

  auto k2 = cofactor_solve(s.field, r("I*b*x + a*y"));
  REQUIRE(k2.has_value());
  CHECK(k2->k == r("-(a*k2*x - I*a020*b*y)/a"));

  auto k3 = cofactor_solve(s.field, r("I*a*k2*x + a020*b*y"));
  REQUIRE(k3.has_value());
  CHECK(k3->k == r("I*a*k2*y/b - a020*b^2*x/a^2"));
  CHECK(lie_derivative(s.field, r("I*a*k2*x + a020*b*y")) == k3->k * r("I*a*k2*x + a020*b*y"));
  const MultiPoly reference = r("(I*a020*b^3*x + a^3*k2*y)/(a^2*b)");
  CHECK_FALSE(k3->k == reference);
  CHECK(constant_ratio(reference, k3->k) == std::optional<CoeffValue>(CoeffValue(GaussQ(0, -1))));
}

TEST_CASE("cofactor edge cases") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("pp0");
  auto one = cofactor_solve(s.field, r("1"));
  REQUIRE(one.has_value());
  CHECK(one->k.is_zero());
  CHECK_THROWS_AS(cofactor_solve(s.field, r("0")), std::invalid_argument);
  CHECK_THROWS_AS(cofactor_solve(s.field, s.ellipsoid->defining_polynomial(), &*s.ellipsoid), std::invalid_argument);
  CHECK_FALSE(cofactor_solve(s.field, r("x + 1")).has_value());
  auto bounded = cofactor_solve(s.field, r("-I*b*x + a*y"), nullptr, 0);
  CHECK_FALSE(bounded.has_value());
}

TEST_CASE("invariance checks on the ellipsoid") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("pp0");
  InvarianceCheck c = invariance_check(s.field, r("I*b*x + a*y"), &*s.ellipsoid);
  REQUIRE(c.accepted());
  CHECK(c.certificate->cofactor.k == r("-(a*k2*x - I*a020*b*y)/a"));
  CHECK(c.certificate->transversality == Transversality::Verified);
  CHECK(c.certificate->tangency == std::optional<Tangency>(Tangency::Transversal));

  const LoadedSystem e = loaded("ex2");
  InvarianceCheck z = invariance_check(e.field, r("z"), &*e.ellipsoid);
  REQUIRE(z.accepted());
  CHECK(z.certificate->cofactor.on_surface);
  CHECK(normal_form(lie_derivative(e.field, r("z")) - z.certificate->cofactor.k * r("z"), *e.ellipsoid).is_zero());
}

TEST_CASE("tangent planes are rejected") {
  const support::Ring r = support::xyz();
  const Ellipsoid sphere(r.ctx.coordinates, {1, 1, 1});
  const VectorField spin(r.ctx.coordinates, {r("0"), r("z"), r("-y")});
  InvarianceCheck c = invariance_check(spin, r("x - 1"), &sphere);
  CHECK_FALSE(c.accepted());
  REQUIRE(c.certificate.has_value());
  CHECK(c.certificate->transversality == Transversality::TangentRejected);
  CHECK(c.rejection == "hyperplane is tangent to the ellipsoid");
  CHECK(invariance_check(spin, r("x - 1/2"), &sphere).accepted());
  CHECK(invariance_check(spin, r("x - 1")).accepted());
}

TEST_CASE("generic quadratic fields reject x + 1") {
  const support::Ring r = support::xyz();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  const std::vector<std::string> monos{"1", "x", "y", "z", "x^2", "x*y", "x*z", "y^2", "y*z", "z^2"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiPoly> comps;
    for (int i = 0; i < 3; ++i) {
      MultiPoly p(r.ctx.coordinates);
      for (const auto& m : monos) p += r(m).scaled(CoeffValue(coef(rng)));
      comps.push_back(p);
    }
    const VectorField x(r.ctx.coordinates, comps);
    // x + 1 is invariant exactly when it divides P_1, i.e. when P_1(-1, y, z) = 0.
    const bool divisible = subst(comps[0], {{"x", r("-1")}}).is_zero();
    InvarianceCheck c = invariance_check(x, r("x + 1"));
    CHECK(c.accepted() == divisible);
    if (!divisible) CHECK(c.rejection == "no cofactor of degree <= 1");
  }
}

TEST_CASE("exponential factors") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("pp0");
  ExpFactorCheck trivial = exp_factor_check(s.field, r("0"), r("1"));
  REQUIRE(trivial.factor.has_value());
  CHECK(trivial.factor->l.is_zero());
  CHECK(trivial.factor->within_degree_bound);

  const support::Ring plane({"x", "y"});
  const VectorField lin(plane.ctx.coordinates, {plane("x"), plane("y")});
  ExpFactorCheck e = exp_factor_check(lin, plane("x"), plane("1"));
  REQUIRE(e.factor.has_value());
  CHECK(e.factor->l == plane("x"));
  CHECK_FALSE(e.factor->within_degree_bound);

  ExpFactorCheck bad = exp_factor_check(lin, plane("1"), plane("x + 1"));
  CHECK_FALSE(bad.factor.has_value());
  CHECK_FALSE(bad.rejection.empty());
  CHECK_THROWS_AS(exp_factor_check(lin, plane("x"), plane("0")), std::invalid_argument);
}

TEST_CASE("extactic polynomials") {
  const support::Ring r = support::xyz();
  const LoadedSystem e = loaded("ex2");
  ExtacticReport rep = extactic(e.field, {r("1"), r("z")});
  CHECK(rep.ew == r("(1/2)*(-(2*b002*c^2)/b^2 + k010)*y*z"));
  CHECK_FALSE(rep.degenerate);

  const LoadedSystem s6 = loaded("sys6");
  ExtacticReport r6 = extactic(s6.field, {r("x"), r("y")});
  CHECK(constant_ratio(r6.ew, r("-a011*y^2*z")).has_value());
  CHECK(multiplicity(r("y"), r6) == 2);
  CHECK(multiplicity(r("z"), r6) == 1);
  CHECK_THROWS_AS(multiplicity(r("x"), r6), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity(r("3"), r6), std::invalid_argument);

  const LoadedSystem s7 = loaded("sys7");
  ExtacticReport r7 = extactic(s7.field, {r("x"), r("y")});
  CHECK(constant_ratio(r7.ew, r("b011*x*y*z")).has_value());
  MultiPoly product = r7.residual;
  for (const auto& f : r7.factors_found) product = product * pow(f.form, f.multiplicity);
  CHECK(product == r7.ew);

  CHECK_THROWS_AS(extactic(s7.field, {r("x"), r("2*x")}), DependentBasis);
  CHECK_THROWS_AS(extactic(s7.field, {}), std::invalid_argument);
  try {
    extactic(s7.field, {r("x"), r("y"), r("x - y")});
  } catch (const DependentBasis& d) {
    CHECK(d.relation.size() == 3);
  }
}

TEST_CASE("degenerate extactics") {
  const support::Ring r = support::xyz();
  const Ellipsoid e(r.ctx.coordinates, {1, 1, 2});
  const VectorField spin(r.ctx.coordinates, {r("-y"), r("x"), r("0")});
  CHECK(on_surface_check(spin, e).on_surface());
  ExtacticReport rep = extactic(spin, {r("1"), r("z")});
  CHECK(rep.degenerate);
  CHECK_THROWS_AS(multiplicity(r("z"), rep), std::invalid_argument);
  PlaneSearch ps = find_parallels(spin, e);
  CHECK(ps.degenerate);
  CHECK(ps.found.empty());
}

TEST_CASE("meridians of the complex-meridian system") {
  const LoadedSystem s = loaded("pp0", "a=1,b=2,c=3,k2=1,a020=1,k001=1");
  PlaneSearch ps = find_meridians(s.field, *s.ellipsoid);
  CHECK(ps.searched);
  CHECK_FALSE(ps.degenerate);
  CHECK(ps.found.size() == 3);
  CHECK(ps.bound.value == std::optional<unsigned long long>(3));
  CHECK(ps.within_bound);
  CHECK(real_planes(ps).size() <= 2);
  for (const auto& h : ps.found) {
    CHECK(h.transversality == Transversality::Verified);
    CHECK(normal_form(lie_derivative(s.field, h.f) - h.cofactor.k * h.f, *s.ellipsoid).is_zero());
  }
  CHECK(forms(ps) == std::vector<std::string>{"-1/2*I*y + x", "-2*I*y + x", "1/2*I*y + x"});

  const LoadedSystem t = loaded("pp0", "a=1,b=2,c=3,k2=I,a020=1,k001=1");
  PlaneSearch pt = find_meridians(t.field, *t.ellipsoid);
  CHECK(pt.found.size() == 3);
  CHECK(real_planes(pt).size() == 1);
}

TEST_CASE("coinciding meridians are reported once") {
  const LoadedSystem s = loaded("pp0", "a=1,b=1,c=1,k2=1,a020=1,k001=0");
  PlaneSearch ps = find_meridians(s.field, *s.ellipsoid);
  CHECK(forms(ps) == std::vector<std::string>{"-I*y + x", "I*y + x"});
  const support::Ring r = support::xyz();
  CHECK(multiplicity(r("-I*y + x"), ps.extactic.ew) == 2);
  CHECK(multiplicity(r("I*y + x"), ps.extactic.ew) == 1);
}

TEST_CASE("meridians of a prescribed-plane system") {
  const LoadedSystem s = loaded("sys10", "a=1,b=2,c=3,alpha=1,beta=2,b011=3,k4=1,k001=1");
  PlaneSearch ps = find_meridians(s.field, *s.ellipsoid);
  CHECK(forms(ps) == std::vector<std::string>{"2*y + x", "y"});
  CHECK(ps.found.size() <= *ps.bound.value);
}

TEST_CASE("parametric meridian search verifies candidates only") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("pp0");
  PlaneSearch ps = find_meridians(s.field, *s.ellipsoid, {r("-I*b*x + a*y"), r("x + y")});
  CHECK_FALSE(ps.searched);
  CHECK_FALSE(ps.note.empty());
  REQUIRE(ps.found.size() == 1);
  CHECK(ps.found[0].f == normalize_linear_form(r("-I*b*x + a*y")));
  CHECK(ps.rejected.size() == 1);
}

TEST_CASE("parallels") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = loaded("ex2", "a=1,b=2,c=3,a010=1,b002=1,k010=1");
  PlaneSearch ps = find_parallels(s.field, *s.ellipsoid);
  CHECK(ps.searched);
  CHECK(forms(ps) == std::vector<std::string>{"z"});
  CHECK(ps.bound.value == std::optional<unsigned long long>(1));

  const VectorField push(r.ctx.coordinates, {r("1"), r("0"), r("0")});
  CHECK_THROWS_AS(find_parallels(push, *s.ellipsoid), NotOnSurface);
  CHECK_THROWS_AS(find_meridians(push, *s.ellipsoid), NotOnSurface);
}

TEST_CASE("linear form normalization") {
  const support::Ring r = support::xyz();
  CHECK(normalize_linear_form(r("2*x + 4*y")) == r("x + 2*y"));
  CHECK(normalize_linear_form(r("I*y - z")) == r("y + I*z"));
  CHECK_THROWS(normalize_linear_form(r("0")));
}

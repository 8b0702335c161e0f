#include "darboux/bounds.hpp"
#include "darboux/integrability.hpp"
#include "darboux/invariant.hpp"
#include "darboux/linalg.hpp"
#include "darboux/system_file.hpp"

#include "../support.hpp"

#include <doctest.h>

using namespace darboux;

namespace {

std::vector<MultiPoly> meridian_forms(const support::Ring& r) {
  return {r("-I*b*x + a*y"), r("I*b*x + a*y"), r("I*a*k2*x + a020*b*y")};
}

std::vector<MultiPoly> cofactors(const VectorField& x, const std::vector<MultiPoly>& fs) {
  std::vector<MultiPoly> out;
  for (const auto& f : fs) out.push_back(cofactor_solve(x, f)->k);
  return out;
}

bool contains(const std::vector<DarbouxRelation>& rels, const std::vector<CoeffValue>& lambdas) {
  // The relations form a basis; a combination of them must give `lambdas`.
  Matrix m;
  for (const auto& rel : rels) m.push_back(rel.lambdas);
  m.push_back(lambdas);
  return rank(m) == rels.size();
}

}  // namespace

TEST_CASE("relations among cofactors") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = load_system("pp0");
  const auto ks = cofactors(s.field, meridian_forms(r));
  const auto rels = solve_relation(ks, {}, &*s.ellipsoid, false);
  REQUIRE_FALSE(rels.empty());
  CHECK(contains(rels, {1, 1, 0}));
  for (const auto& rel : rels) CHECK(rel.is_first_integral());

  const auto kx = solve_relation({r("x"), r("-x"), r("y")}, {}, nullptr, false);
  REQUIRE(kx.size() == 1);
  CHECK(kx[0].lambdas == std::vector<CoeffValue>{1, 1, 0});

  const auto sig = solve_relation({r("3")}, {}, nullptr, true);
  REQUIRE(sig.size() == 1);
  CHECK(sig[0].lambdas == std::vector<CoeffValue>{1});
  CHECK(sig[0].sigma == CoeffValue(-3));
  CHECK_FALSE(sig[0].is_first_integral());

  CHECK(solve_relation({r("3")}, {}, nullptr, false).empty());
  CHECK(solve_relation({r("x"), r("y")}, {}, nullptr, true).empty());
  CHECK_THROWS_AS(solve_relation({}, {}, nullptr, true), std::invalid_argument);

  const auto mixed = solve_relation({r("x")}, {r("-2*x")}, nullptr, false);
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].lambdas == std::vector<CoeffValue>{1});
  CHECK(mixed[0].mus == std::vector<CoeffValue>{CoeffValue(GaussQ(mpq_class(1, 2)))});
}

TEST_CASE("first integral of the complex-meridian system") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = load_system("pp0");
  const auto fs = meridian_forms(r);
  DarbouxRelation rel{{1, 1, 0}, {}, 0};
  const DarbouxFunction d = build_darboux_function(s.field, fs, {}, rel, &*s.ellipsoid);
  REQUIRE(d.polynomial.has_value());
  CHECK(*d.polynomial == r("b^2*x^2 + a^2*y^2"));
  CHECK(lie_derivative(s.field, r("b^2*x^2 + a^2*y^2")).is_zero());
  CHECK(d.sigma.is_zero());

  DarbouxRelation wrong{{1, 0, 0}, {}, 0};
  CHECK_THROWS_AS(build_darboux_function(s.field, fs, {}, wrong), VerificationFailure);
  DarbouxRelation zero{{0, 0, 0}, {}, 0};
  CHECK_THROWS_AS(build_darboux_function(s.field, fs, {}, zero), std::invalid_argument);
  DarbouxRelation short_rel{{1, 1}, {}, 0};
  CHECK_THROWS_AS(build_darboux_function(s.field, fs, {}, short_rel), std::invalid_argument);
}

TEST_CASE("time-dependent invariants and exponential factors") {
  const support::Ring plane({"x", "y"});
  const VectorField x(plane.ctx.coordinates, {plane("x"), plane("-y")});
  DarbouxRelation rel{{1}, {}, -1};
  const DarbouxFunction d = build_darboux_function(x, {plane("x")}, {}, rel);
  CHECK(d.rendering.find("exp") != std::string::npos);
  CHECK(d.polynomial == std::optional<MultiPoly>(plane("x")));
  CHECK_THROWS_AS(build_darboux_function(x, {plane("x")}, {}, DarbouxRelation{{1}, {}, 1}), VerificationFailure);

  // exp(y) has cofactor -y and x*y has cofactor 0 under (x, -y); y has cofactor -1.
  const VectorField lin(plane.ctx.coordinates, {plane("x"), plane("-y")});
  const ExpFactorCheck e = exp_factor_check(lin, plane("y"), plane("1"));
  REQUIRE(e.factor.has_value());
  CHECK(e.factor->l == plane("-y"));
  const auto rels = solve_relation({plane("1")}, {e.factor->l}, nullptr, true);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].mus == std::vector<CoeffValue>{0});
  CHECK(rels[0].sigma == CoeffValue(-1));
}

TEST_CASE("real forms of conjugate pairs") {
  const support::Ring r = support::xyz();
  const RealForm a = realify_pair(r("x + I*y"), 1);
  CHECK(a.modulus_squared == r("x^2 + y^2"));
  CHECK_FALSE(a.has_arctan);
  const RealForm b = realify_pair(r("-I*b*x + a*y"), 1);
  CHECK(b.modulus_squared == r("b^2*x^2 + a^2*y^2"));
  CHECK(b.re_f == r("a*y"));
  CHECK(b.im_f == r("-b*x"));
  const RealForm c = realify_pair(r("x + I*y"), CoeffValue(GaussQ(0, 1)));
  CHECK(c.has_arctan);
  CHECK(c.rendering.find("arctan") != std::string::npos);
  CHECK_THROWS_AS(realify_pair(r("x"), 2), std::invalid_argument);

  const RealExpForm e = realify_exp_pair(r("x"), r("1"), CoeffValue(GaussQ(0, 1)));
  CHECK(e.numerator.is_zero());
  CHECK(e.rendering == "1");
  const RealExpForm f = realify_exp_pair(r("x"), r("y + I"), 1);
  CHECK(f.denominator == r("y^2 + 1"));
  CHECK(f.numerator == r("x*y"));
  CHECK(conj(r("I*x")) == r("-I*x"));
  CHECK(real_part(r("(1 + 2*I)*x")) == r("x"));
  CHECK(imag_part(r("(1 + 2*I)*x")) == r("2*x"));
}

namespace {

// Direct integer evaluation of the counting formulas.
unsigned long long choose(long long u, long long v) {
  if (v < 0 || u < v) return 0;
  unsigned long long out = 1;
  for (long long i = 1; i <= v; ++i) out = out * static_cast<unsigned long long>(u - v + i) / static_cast<unsigned long long>(i);
  return out;
}

}  // namespace

TEST_CASE("hyperplane and meridian bounds") {
  for (int m1 = 1; m1 <= 6; ++m1) {
    CHECK(bound_hyperplanes_Rn(2, {m1, m1}, false).value == std::optional<unsigned long long>(3 * m1 - 1));
  }
  CHECK(*bound_hyperplanes_Rn(3, {2, 2, 2}, false).value == choose(3, 2) * 1 + 6);
  CHECK(*bound_hyperplanes_Rn(2, {2, 2}, true).value == choose(1, 2) + 2 + 1);
  CHECK(*bound_meridians(2, {2, 2, 2}).value == 3);
  CHECK(*bound_meridians(3, {2, 2, 2, 2}).value == choose(2, 2) + 4 + 1);
  CHECK(*bound_meridians(2, {1, 1, 1}).value == 2);
  CHECK_THROWS_AS(bound_hyperplanes_Rn(1, {2}, false), std::invalid_argument);
  CHECK_THROWS_AS(bound_meridians(1, {2, 2}), std::invalid_argument);
}

TEST_CASE("parallel bounds") {
  const LoadedSystem ex2 = load_system("ex2");
  CHECK(*bound_parallels(degree_vector(ex2.field)).value == 1);
  const LoadedSystem pp0 = load_system("pp0");
  CHECK(*bound_parallels(degree_vector(pp0.field)).value == 2);
  const support::Ring r = support::xyz();
  const VectorField flat(r.ctx.coordinates, {r("-y"), r("x"), r("0")});
  const BoundReport b = bound_parallels(degree_vector(flat));
  CHECK(b.degenerate());
  CHECK_FALSE(b.note.empty());
}

TEST_CASE("integrability thresholds") {
  const Thresholds amb = integrability_thresholds(3, 2, ThresholdContext::Ambient);
  CHECK(amb.darboux == choose(4, 1) + 1);
  CHECK(amb.rational == choose(4, 1) + 3);
  CHECK_FALSE(amb.dim_plus_one.has_value());

  const Thresholds ell = integrability_thresholds(2, 2, ThresholdContext::Ellipsoid);
  CHECK(ell.darboux == 6 * choose(4, 2) / 4 + 1);
  CHECK(ell.rational == 6 * choose(4, 2) / 4 + 2);
  CHECK(ell.darboux == 10);
  CHECK(ell.rational == 11);
  CHECK(ell.dim_plus_one == std::optional<unsigned long long>(6));
  CHECK_FALSE(ell.agrees_with_dim);
  CHECK(integrability_thresholds(2, 1, ThresholdContext::Ellipsoid).darboux == 4 * choose(3, 1) / 3 + 1);
  CHECK_THROWS_AS(integrability_thresholds(1, 2, ThresholdContext::Ambient), std::invalid_argument);
  CHECK_THROWS_AS(integrability_thresholds(2, 0, ThresholdContext::Ellipsoid), std::invalid_argument);

  CHECK(check_threshold(10, 0, ell).text == "relation guaranteed");
  CHECK(check_threshold(3, 0, ell).text == "no guarantee");
  const ThresholdVerdict v = check_threshold(11, 0, ell);
  CHECK(v.text == "rational first integral guaranteed");
  CHECK(v.relation_guaranteed);
  CHECK(v.rational_integral_guaranteed);
}

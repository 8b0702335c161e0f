#include "darboux/det.hpp"
#include "darboux/linalg.hpp"
#include "darboux/unipoly.hpp"

#include "../support.hpp"

#include <doctest.h>

using namespace darboux;

namespace {

UniPoly t_poly(std::vector<GaussQ> c) {
  std::vector<CoeffValue> v(c.begin(), c.end());
  return UniPoly("t", std::move(v));
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  const UniPoly p = t_poly({-1, 0, 1});
  const UniPoly q = t_poly({1, 1});
  CHECK(p.degree().value() == 2);
  CHECK(UniPoly().degree().is_minus_infinity());
  auto [quo, rem] = divrem(p, q);
  CHECK(quo == t_poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(p, t_poly({1, 2, 1})) == q);
  CHECK(p.derivative() == t_poly({0, 2}));
  CHECK(p.evaluate(CoeffValue(3)) == CoeffValue(8));
  CHECK(t_poly({2, 4}).monic() == t_poly({mpq_class(1, 2), 1}));
  CHECK(p.to_string() == "t^2 - 1");
  CHECK_THROWS_AS(divrem(p, UniPoly()), std::domain_error);
}

TEST_CASE("gaussian rational roots") {
  SUBCASE("t^2 + 1") {
    const GaussianRoots r = gaussian_roots(t_poly({1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair<GaussQ, unsigned>{GaussQ(0, -1), 1});
    CHECK(r.roots[1] == std::pair<GaussQ, unsigned>{GaussQ(0, 1), 1});
    CHECK(r.residual.degree().value() == 0);
  }
  SUBCASE("t^2 - 2 keeps its residual") {
    const GaussianRoots r = gaussian_roots(t_poly({-2, 0, 1}));
    CHECK(r.roots.empty());
    CHECK(r.residual == t_poly({-2, 0, 1}));
  }
  SUBCASE("(t - 1)^2 (t + 3)") {
    const UniPoly u = t_poly({-1, 1}) * t_poly({-1, 1}) * t_poly({3, 1});
    const GaussianRoots r = gaussian_roots(u);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair<GaussQ, unsigned>{GaussQ(-3), 1});
    CHECK(r.roots[1] == std::pair<GaussQ, unsigned>{GaussQ(1), 2});
  }
  SUBCASE("rational and complex roots with a zero root") {
    // 6 t (2t - 1)(t - (1 + 2i)/3)
    const UniPoly u = t_poly({0, 6}) * t_poly({-1, 2}) * t_poly({GaussQ(mpq_class(-1, 3), mpq_class(-2, 3)), 1});
    const GaussianRoots r = gaussian_roots(u);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].first == GaussQ(0));
    CHECK(r.roots[1].first == GaussQ(mpq_class(1, 3), mpq_class(2, 3)));
    CHECK(r.roots[2].first == GaussQ(mpq_class(1, 2)));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(gaussian_roots(UniPoly()), std::domain_error);
    CHECK_THROWS_AS(gaussian_roots(UniPoly("t", {CoeffValue::param("a"), CoeffValue(1)})), ParametricInput);
  }
}

TEST_CASE("linear algebra over the coefficient field") {
  const CoeffValue a = CoeffValue::param("a");
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {a, 0, 1}};
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    CoeffValue dot;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot.is_zero());
  }
  CHECK(nullspace({}, 2).size() == 2);
  auto sol = solve({{1, 1}, {1, -1}}, {a, 0}, 2);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == a / CoeffValue(2));
  CHECK_FALSE(solve({{1, 1}, {1, 1}}, {0, 1}, 2).has_value());
}

TEST_CASE("polynomial determinants") {
  const support::Ring r = support::xyz();
  CHECK(determinant({{r("1")}}) == r("1"));
  CHECK(determinant({{r("x"), r("y")}, {r("z"), r("x")}}) == r("x^2 - y*z"));
  const PolyMatrix v{{r("1"), r("x"), r("x^2")}, {r("1"), r("y"), r("y^2")}, {r("1"), r("z"), r("z^2")}};
  CHECK(determinant(v) == r("(y - x)*(z - x)*(z - y)"));
  const PolyMatrix singular{{r("x"), r("y"), r("0")}, {r("2*x"), r("2*y"), r("0")}, {r("1"), r("z"), r("a")}};
  CHECK(determinant(singular).is_zero());
  const PolyMatrix needs_swap{{r("0"), r("1"), r("0")}, {r("1"), r("0"), r("0")}, {r("0"), r("0"), r("x")}};
  CHECK(determinant(needs_swap) == r("-x"));
  CHECK_THROWS_AS(determinant({}), std::invalid_argument);
  CHECK_THROWS_AS(determinant({{r("1"), r("x")}}), std::invalid_argument);
  const support::Ring s({"x", "y"});
  CHECK_THROWS_AS(determinant({{r("1"), r("x")}, {s("1"), s("x")}}), CoordinateMismatch);
}

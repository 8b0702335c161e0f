#include "darboux/catalog.hpp"
#include "darboux/invariant.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace darboux;

TEST_CASE("the built-in catalog") {
  const auto entries = catalog_entries();
  REQUIRE(entries.size() == 20);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  CHECK(names.count("pp0") == 1);
  CHECK(names.count("ex2") == 1);
  for (int i = 1; i <= 18; ++i) CHECK(names.count("sys" + std::to_string(i)) == 1);
  CHECK_FALSE(catalog_text("sys19").has_value());
}

TEST_CASE("every catalog entry re-verifies") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    const LoadedSystem s = load_spec(parse_system_text(e.text));
    CHECK(s.spec.name == e.name);
    const EntryVerification v = verify_entry(s);
    for (const auto& c : v.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    if (e.name == "pp0" || e.name == "sys18") {
      CHECK_FALSE(v.flags.empty());
    } else {
      CHECK(v.flags.empty());
    }
  }
}

TEST_CASE("the stored extactic of system 18 is the recomputed one") {
  const support::Ring r = support::xyz();
  const LoadedSystem s = load_system("sys18");
  const MultiPoly ew = extactic(s.field, {r("x"), r("y")}).ew;
  CHECK(constant_ratio(ew, s.parse_set(*s.spec.expect.extactic)).has_value());
  CHECK_FALSE(constant_ratio(ew, s.parse_set(*s.spec.expect.extactic_printed)).has_value());
  CHECK_FALSE(divides(r("x"), ew));
  CHECK(divides(r("y"), ew));
}

TEST_CASE("prescribed planes divide the extactic polynomial") {
  const support::Ring r = support::xyz();
  for (const auto& e : catalog_entries()) {
    if (e.name.rfind("sys", 0) != 0) continue;
    CAPTURE(e.name);
    const LoadedSystem s = load_spec(parse_system_text(e.text));
    const MultiPoly ew = extactic(s.field, {r("x"), r("y")}).ew;
    CHECK(divides(r("alpha*x + beta*y"), ew) == (e.name != "sys6" && e.name != "sys7"));
  }
}

TEST_CASE("catalog directory override") {
  const auto dir = std::filesystem::temp_directory_path() / "darboux_catalog_override";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "spin.sys");
    out << "[system]\nname = spin\n[coordinates]\nx, y, z\n[ellipsoid]\n1, 1, 1\n[field]\nx' = -y\ny' = x\nz' = 0\n";
  }
  {
    std::ofstream out(dir / "ignored.txt");
    out << "not a system";
  }
  ::setenv("DARBOUX_CATALOG_DIR", dir.c_str(), 1);
  const auto entries = catalog_entries();
  const bool found_pp0 = catalog_text("pp0").has_value();
  ::setenv("DARBOUX_CATALOG_DIR", (dir / "missing").c_str(), 1);
  CHECK_THROWS_AS(catalog_entries(), SystemError);
  ::unsetenv("DARBOUX_CATALOG_DIR");
  std::filesystem::remove_all(dir);

  REQUIRE(entries.size() == 1);
  CHECK(entries[0].name == "spin");
  CHECK_FALSE(found_pp0);
  CHECK(catalog_entries().size() == 20);
}

#include "darboux/catalog.hpp"
#include "darboux/invariant.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <future>

using namespace darboux;

TEST_CASE("independent computations agree across threads") {
  const std::vector<CatalogEntry> entries = catalog_entries();
  std::vector<std::string> serial;
  for (const auto& e : entries) {
    const LoadedSystem s = load_spec(parse_system_text(e.text));
    serial.push_back(extactic(s.field, {s.parse("x"), s.parse("y")}).ew.to_string());
  }
  std::vector<std::future<std::string>> jobs;
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e] {
      const LoadedSystem s = load_spec(parse_system_text(e.text));
      return extactic(s.field, {s.parse("x"), s.parse("y")}).ew.to_string();
    }));
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) CHECK(jobs[i].get() == serial[i]);
}

TEST_CASE("shared values can be read from many threads") {
  const LoadedSystem s = load_system("pp0");
  const MultiPoly f = s.parse("-I*b*x + a*y");
  std::vector<std::future<std::string>> jobs;
  for (int i = 0; i < 8; ++i) {
    jobs.push_back(std::async(std::launch::async, [&s, &f, i] {
      const Symbol fresh("thread_symbol_" + std::to_string(i));
      CHECK_FALSE(fresh.name().empty());
      return cofactor_solve(s.field, f, &*s.ellipsoid)->k.to_string();
    }));
  }
  const std::string expected = cofactor_solve(s.field, f, &*s.ellipsoid)->k.to_string();
  for (auto& j : jobs) CHECK(j.get() == expected);
}

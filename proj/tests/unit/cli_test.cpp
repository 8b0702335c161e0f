#include "darboux/catalog.hpp"
#include "darboux/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace darboux;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("darboux command finds the first integral") {
  const Json j = run_json({"pp0", "--planes", "-I*b*x+a*y,I*b*x+a*y"});
  CHECK(j["command"] == "darboux");
  REQUIRE(j["relations"].size() == 1);
  CHECK(j["relations"][0]["lambdas"] == Json::array({"1", "1"}));
  CHECK(j["relations"][0]["sigma"] == "0");
  CHECK(j["relations"][0]["polynomial"] == "a^2*y^2 + b^2*x^2");
  CHECK(j["relations"][0]["lie_derivative"] == "0");
  CHECK(run_json({"darboux", "pp0", "--planes", "-I*b*x+a*y,I*b*x+a*y"}) == j);

  const Json none = run_json({"darboux", "pp0", "--planes", "-I*b*x+a*y"});
  CHECK(none["relations"].empty());
  CHECK(run({"darboux", "pp0", "--planes", "x + 1"}).code == kVerificationFailure);
  CHECK(run({"darboux", "pp0"}).code == kValidationError);
  CHECK(run({"darboux", "pp0", "--exp", "x"}).code == kValidationError);
}

TEST_CASE("surface, cofactor and extactic commands") {
  const Json s = run_json({"check-surface", "ex2"});
  CHECK(s["on_surface"] == true);
  CHECK(s["multiplier"] == "k010*y");

  const Json c = run_json({"cofactor", "pp0", "--f", "I*b*x + a*y"});
  CHECK(c["invariant"] == true);
  CHECK(c["transversality"] == "verified");
  const Json n = run_json({"cofactor", "pp0", "--f", "x + 1"});
  CHECK(n["invariant"] == false);
  CHECK(n["rejection"] == "no cofactor of degree <= 1");

  const Json e = run_json({"extactic", "ex2", "--basis", "1, z"});
  CHECK(e["basis"] == Json::array({"1", "z"}));
  REQUIRE(e["factors"].size() == 2);
  CHECK(e["factors"][0]["factor"] == "y");
  CHECK(e["factors"][1]["factor"] == "z");
  const Json m = run_json({"multiplicity", "sys6", "--f", "y"});
  CHECK(m["multiplicity"] == 2);
  CHECK(run_json({"multiplicity", "sys6", "--f", "x"})["multiplicity"] == 0);
}

TEST_CASE("plane searches") {
  const Json m = run_json({"meridians", "pp0", "--instantiate", "a=1,b=2,c=3,k2=1,a020=1,k001=1"});
  CHECK(m["count"] == 3);
  CHECK(m["real_count"] == 0);
  CHECK(m["bound"]["value"] == 3);
  const Json p = run_json({"--instantiate", "a=1,b=2,c=3,a010=1,b002=1,k010=1", "parallels", "ex2"});
  CHECK(p["count"] == 1);
  CHECK(p["found"][0]["f"] == "z");
  const Json sym = run_json({"parallels", "ex2", "--candidates", "z"});
  CHECK(sym["searched"] == false);
  CHECK(sym["count"] == 1);
  CHECK(run({"meridians", "pp0", "--instantiate", "q=1"}).code == kValidationError);
}

TEST_CASE("bounds and thresholds") {
  CHECK(run_json({"bounds", "--n", "2", "--m", "2,2,2", "--meridians"})["value"] == 3);
  CHECK(run_json({"bounds", "--n", "2", "--m", "3,3"})["value"] == 8);
  CHECK(run_json({"bounds", "--n", "2", "--m", "2,2", "--through-point"})["value"] == 3);
  CHECK(run_json({"bounds", "--n", "2", "--m", "2,2,1", "--parallels"})["value"] == 1);
  CHECK(run_json({"bounds", "--n", "2", "--m=2,2,-inf", "--parallels"})["value"].is_null());
  CHECK(run({"bounds", "--n", "2", "--m", "two"}).code == kValidationError);
  CHECK(run({"bounds", "--n", "1", "--m", "2"}).code == kValidationError);

  const Json t = run_json({"thresholds", "--n", "2", "--m1", "2", "--context", "ellipsoid", "--p", "11"});
  CHECK(t["darboux"] == 10);
  CHECK(t["rational"] == 11);
  CHECK(t["verdict"] == "rational first integral guaranteed");
  CHECK(run_json({"thresholds", "--n", "3", "--m1", "2"})["darboux"] == 5);
  CHECK(run({"thresholds", "--n", "3", "--m1", "2", "--context", "torus"}).code == kValidationError);
}

TEST_CASE("catalog commands") {
  const Json list = run_json({"catalog"});
  CHECK(list["systems"].size() == 20);
  const Run text = run({"catalog", "ex2"});
  CHECK(text.code == 0);
  CHECK(text.out == *catalog_text("ex2"));
  CHECK(run({"catalog", "nope"}).code == kValidationError);

  const Json v = run_json({"verify-catalog"});
  CHECK(v["total"] == 20);
  CHECK(v["passed"] == 20);
  CHECK(v["flagged"] == 2);
  const Json one = run_json({"verify-catalog", "sys18"});
  CHECK(one["total"] == 1);
  CHECK(one["entries"][0]["flags"].size() == 2);
  CHECK(run({"verify-catalog", "nope"}).code == kValidationError);
}

TEST_CASE("verification failures and validation errors") {
  const auto dir = std::filesystem::temp_directory_path() / "darboux_cli_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "wrong.sys";
  {
    std::ofstream out(good);
    out << "[system]\nname = wrong\n[coordinates]\nx, y, z\n[ellipsoid]\n1, 1, 1\n[field]\nx' = -y\ny' = x\nz' = 0\n"
           "[expect]\nplane = x\n";
  }
  ::setenv("DARBOUX_CATALOG_DIR", dir.c_str(), 1);
  const Run r = run({"verify-catalog", "--json"});
  ::unsetenv("DARBOUX_CATALOG_DIR");
  CHECK(r.code == kVerificationFailure);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == 0);

  const auto crossing = dir / "crossing.sys";
  {
    std::ofstream out(crossing);
    out << "[coordinates]\nx, y, z\n[ellipsoid]\n1, 1, 1\n[field]\nx' = 1\ny' = 0\nz' = 0\n";
  }
  const Run c = run({"check-surface", crossing.string()});
  CHECK(c.code == kValidationError);
  CHECK(c.err.find("2*x") != std::string::npos);
  std::filesystem::remove_all(dir);

  CHECK(run({}).code == kValidationError);
  CHECK(run({"cofactor", "pp0"}).code == kValidationError);
  CHECK(run({"cofactor", "pp0", "--f", "x/(y+1)"}).code == kValidationError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::string> args{"meridians", "pp0", "--instantiate", "a=1,b=2,c=3,k2=I,a020=1,k001=1", "--json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  const Run t1 = run({"verify-catalog"});
  const Run t2 = run({"verify-catalog"});
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("system: sys18") != std::string::npos);
}

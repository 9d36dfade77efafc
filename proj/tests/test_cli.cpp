#include <string>

#include "doctest.h"
#include "json.hpp"
#include "process.hpp"

using nlohmann::json;
using namespace ordcomp::testing;

namespace {

const std::string kCli = quote(ORDCOMP_CLI);
const std::string kFix = std::string(ORDCOMP_FIXTURES) + "/";

RunResult cli(const std::string& args) { return run(kCli + " " + args); }

}  // namespace

TEST_CASE("complete reports cuts and verification") {
  auto r = cli("complete --input " + kFix + "chain3.json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["cutCount"] == 3);
  CHECK(j["verification"]["allPassed"] == true);
  CHECK(j["hasMinimum"] == true);

  r = cli("gen --family antichain --n 2");
  REQUIRE(r.status == 0);
  ScratchDir tmp;
  spit(tmp / "a2.json", r.out);
  r = cli("complete --input " + tmp / "a2.json" + " --emit-dot " + tmp / "a2.dot");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["cutCount"] == 4);
  CHECK(slurp(tmp / "a2.dot").rfind("digraph", 0) == 0);
}

TEST_CASE("invalid input exits 2") {
  CHECK(cli("complete --input " + kFix + "malformed.json").status == 2);
  CHECK(cli("complete --input " + kFix + "cycle.json").status == 2);
  CHECK(cli("complete --input " + kFix + "duplicate.json").status == 2);
  CHECK(cli("complete --input " + kFix + "missing.json").status == 2);
  CHECK(cli("complete").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("check --suite unknown").status == 2);
  CHECK(cli("gen --family tree --n 3").status == 2);
  CHECK(cli("complete --input " + kFix + "chain3.json --max-arity 0").status == 2);
}

TEST_CASE("caps exit 3") {
  CHECK(cli("gen --family boolean --k 20").status == 3);
  CHECK(cli("complete --input " + kFix + "chain3.json --max-cuts 2").status == 3);
  CHECK(cli("complete --input " + kFix + "chain3.json --max-arity 2").status == 3);
}

TEST_CASE("solve exit codes follow solvability") {
  const std::string eq = " --input " + kFix + "eq_point_antichain.json --target " + kFix;
  auto r = cli("solve" + eq + "target_p.json");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["solution"] == json::array({"u"}));
  r = cli("solve" + eq + "target_q.json");
  CHECK(r.status == 1);
  const json j = json::parse(r.out);
  CHECK(j["supOfImages"] != j["infOfImages"]);
  CHECK(cli("solve" + eq + "target_unknown.json").status == 2);

  const std::string id = " --input " + kFix + "eq_chain_identity.json --target ";
  ScratchDir tmp;
  spit(tmp / "t.json", R"({"principal": "b"})");
  r = cli("solve" + id + tmp / "t.json");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["solution"] == json::array({"x", "y"}));
  spit(tmp / "bad.json", R"({"cut": ["b"]})");
  CHECK(cli("solve" + id + tmp / "bad.json").status == 2);
}

TEST_CASE("check suites") {
  CHECK(cli("check --suite macneille --input " + kFix + "chain3.json").status == 0);
  CHECK(cli("check --suite theorem41 --count 20").status == 0);
  const auto r = cli("check --suite kernels --count 20");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("gen is deterministic and round-trips") {
  const auto a = cli("gen --family random --n 6 --seed 7");
  const auto b = cli("gen --family random --n 6 --seed 7");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["elements"].size() == 6);
  CHECK(json::parse(cli("gen --family antichain --n 4").out)["relation"].empty());

  ScratchDir tmp;
  spit(tmp / "eq.json", cli("gen --family gridfn --g 2 --v 2 --stencil identity").out);
  spit(tmp / "t.json", R"({"principal": "01"})");
  const auto s = cli("solve --global --input " + tmp / "eq.json" + " --target " + tmp / "t.json");
  CHECK(s.status == 0);
  CHECK(json::parse(s.out)["globalCharacter"]["orderIsomorphism"] == true);
}

TEST_CASE("export formats") {
  const auto dot = cli("export --input " + kFix + "diamond.json");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const auto js = cli("export --format json --input " + kFix + "diamond.json");
  CHECK(js.status == 0);
  CHECK(json::parse(js.out)["cuts"].size() == 4);
  CHECK(cli("export --format svg --input " + kFix + "diamond.json").status == 2);
}

#include "doctest.h"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/io.hpp"

using namespace ordcomp;
using io::json;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ordcomp::Error");
  return Errc::InvalidInput;
}

}  // namespace

TEST_CASE("poset JSON round-trips through the cover relation") {
  for (const Poset& p :
       {gen::chain(4), gen::boolean_lattice(3), gen::divisor_lattice(60), gen::random_poset(8, 0.4, 3)}) {
    const json j = io::to_json(p);
    const Poset q = io::poset_from_json(j);
    CHECK(q.labels() == p.labels());
    for (std::size_t a = 0; a < p.size(); ++a) CHECK(q.down(a) == p.down(a));
    CHECK(io::to_json(q) == j);
  }
}

TEST_CASE("full relations are accepted when asked for") {
  const json j = json::parse(R"({"elements": ["a", "b"], "relation": [["a", "a"], ["a", "b"], ["b", "b"]],
                                  "relation_kind": "full"})");
  CHECK(io::poset_from_json(j).leq(0, 1));
  json bad = j;
  bad["relation_kind"] = "dag";
  CHECK(code_of([&] { io::poset_from_json(bad); }) == Errc::InvalidInput);
}

TEST_CASE("malformed documents are invalid input") {
  CHECK(code_of([] { io::parse("{\"elements\": ["); }) == Errc::InvalidInput);
  CHECK(code_of([] { io::poset_from_json(json::array()); }) == Errc::InvalidInput);
  CHECK(code_of([] { io::poset_from_json(json{{"elements", {1, 2}}}); }) == Errc::InvalidInput);
  CHECK(code_of([] { io::read_file("/nonexistent/poset.json"); }) == Errc::InvalidInput);
}

TEST_CASE("unicode labels are opaque") {
  const json j = json::parse(R"({"elements": ["α", "β"], "relation": [["α", "β"]]})");
  const Poset p = io::poset_from_json(j);
  CHECK(p.leq(p.index_of("α"), p.index_of("β")));
}

TEST_CASE("domain is a set unless a relation is given") {
  CHECK(std::holds_alternative<CarrierSet>(io::domain_from_json(json{{"elements", {"x"}}})));
  CHECK(std::holds_alternative<Poset>(io::domain_from_json(json{{"elements", {"x"}}, {"relation", json::array()}})));
}

TEST_CASE("equation and map JSON round-trip") {
  const auto e = gen::random_equation(17);
  const json j = io::to_json(e);
  const auto back = io::equation_from_json(j);
  CHECK(io::to_json(back) == j);

  const auto x = gen::random_poset(4, 0.5, 1);
  const auto phi = gen::random_increasing_map(x, gen::chain(3), 2);
  const json mj = io::to_json(phi);
  CHECK(io::to_json(io::map_from_json(mj)) == mj);
}

TEST_CASE("targets by cut or by principal element") {
  const Poset y = gen::chain(3);
  CHECK(io::target_from_json(y, json{{"principal", "c1"}}).mask() == 0b011);
  CHECK(io::target_from_json(y, json{{"cut", {"c0"}}}).mask() == 0b001);
  // Not closed, but still parsed: rejecting it is the solver's job.
  CHECK(io::target_from_json(y, json{{"cut", {"c1"}}}).mask() == 0b010);
  CHECK(code_of([&] { io::target_from_json(y, json{{"principal", "c9"}}); }) == Errc::UnknownElement);
  CHECK(code_of([&] { io::target_from_json(y, json{{"both", 1}}); }) == Errc::InvalidInput);
}

TEST_CASE("completion JSON lists cuts canonically with the embedding") {
  const auto c = macneille_completion(gen::antichain(2));
  const json j = io::to_json(c);
  CHECK(j["cuts"] == json::parse(R"([[], ["a0"], ["a1"], ["a0", "a1"]])"));
  CHECK(j["embedding"]["a1"] == 2);
}

TEST_CASE("solve report carries the diagnostic blocks") {
  const Poset y = gen::antichain(2);
  const auto e = EquationInstance::build(CarrierSet({"u"}), y, {0});
  const json j = io::to_json(solve(e, y.subset(0)), e);
  CHECK(j["schemaVersion"] == io::kSchemaVersion);
  CHECK(j["solvable"] == false);
  CHECK(j["solution"].is_null());
  CHECK(j["emptyFamilyFlags"]["lowerFamilyEmpty"] == true);
  CHECK(j["assumptionFlags"]["quotientHasMinimum"] == true);
  CHECK(j["assumptionFlags"]["deviatesFromNoMinNoMax"] == true);
}

TEST_CASE("DOT output marks principal cuts") {
  const std::string dot = io::to_dot(macneille_completion(gen::antichain(2)));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("lightblue") != std::string::npos);
  CHECK(dot == io::to_dot(macneille_completion(gen::antichain(2))));
}

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
//
//   acceptance <path-to-ordcomp-cli> <fixtures-dir>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordcomp/checks.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/oracle.hpp"
#include "process.hpp"

namespace {

using namespace ordcomp;
using checks::CheckResult;
using nlohmann::json;
namespace t = ordcomp::testing;

constexpr std::size_t kEquationSeeds = 100;
constexpr std::size_t kCutMapSeeds = 100;

// ---- 1, 2 ------------------------------------------------------------------

CheckResult cut_calculus_on_corpus() {
  CheckResult r{.suite = "cut-calculus"};
  for (const auto& p : checks::standard_corpus()) r.merge(checks::cut_calculus(p));
  return r;
}

CheckResult macneille_on_corpus() {
  CheckResult r{.suite = "macneille"};
  for (const auto& p : checks::standard_corpus()) r.merge(checks::macneille(p));
  return r;
}

// ---- 3 ---------------------------------------------------------------------

Poset completion_as_poset(const CompletedPoset& c) {
  std::vector<std::string> labels;
  std::vector<Poset::IndexPair> rel;
  for (std::size_t i = 0; i < c.size(); ++i) {
    labels.push_back("k" + std::to_string(i));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c.leq(i, j)) rel.emplace_back(i, j);
    }
  }
  return Poset::from_indices(std::move(labels), rel, RelationKind::Full, Limits{.max_arity = 64});
}

bool squarefree(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

CheckResult closed_form_sizes() {
  CheckResult r{.suite = "closed-form"};
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto c = macneille_completion(gen::chain(n));
    r.expect(c.size() == n, "chain(" + std::to_string(n) + ") has " + std::to_string(c.size()) + " cuts");
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto c = macneille_completion(gen::antichain(n));
    r.expect(c.size() == n + 2, "antichain(" + std::to_string(n) + ") has " + std::to_string(c.size()) + " cuts");
  }
  // A lattice is self-complete: the embedding hits every cut and the cut
  // order is isomorphic to the original.
  auto self_complete = [&](const Poset& p, const std::string& what) {
    const auto c = macneille_completion(p);
    r.expect(c.size() == p.size(), what + " has " + std::to_string(c.size()) + " cuts");
    if (c.size() != p.size()) return;
    std::vector<bool> hit(c.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) hit[c.embedding(x)] = true;
    r.expect(std::find(hit.begin(), hit.end(), false) == hit.end(), what + ": embedding is not onto");
    r.expect(order_isomorphism(completion_as_poset(c), p).has_value(), what + ": cut order not isomorphic");
  };
  for (std::size_t k = 0; k <= 4; ++k) self_complete(gen::boolean_lattice(k), "boolean(" + std::to_string(k) + ")");
  // Squarefree m up to 2*3*5*7, i.e. at most four prime factors.
  for (std::uint64_t m = 1; m <= 210; ++m) {
    if (squarefree(m)) self_complete(gen::divisor_lattice(m), "divisor(" + std::to_string(m) + ")");
  }
  return r;
}

// ---- 4, 5 ------------------------------------------------------------------

CheckResult solver_on_equations(bool local) {
  CheckResult r{.suite = local ? "local solvability" : "global solvability"};
  for (std::uint64_t seed = 0; seed < kEquationSeeds; ++seed) {
    const auto e = gen::random_equation(seed);
    r.merge(local ? checks::local_solvability(e) : checks::global_solvability(e));
  }
  return r;
}

// ---- 6 ---------------------------------------------------------------------

CheckResult bound_chain_on_cut_maps() {
  CheckResult r{.suite = "bound chain"};
  for (std::uint64_t s = 0; s < kCutMapSeeds; ++s) {
    const auto src = macneille_completion(gen::random_poset(1 + s % 6, 0.3, s));
    const auto dst = macneille_completion(gen::random_poset(1 + (s / 6) % 6, 0.3, ~s));
    const CutMap mu = gen::random_increasing_cut_map(src, dst, s);
    r.expect(is_increasing(mu), "seed " + std::to_string(s) + ": generated map is not increasing");
    r.merge(checks::bound_chain(mu, s));
  }
  return r;
}

// ---- 7 ---------------------------------------------------------------------

class CliHarness {
 public:
  CliHarness(std::string cli, std::string fixtures) : cli_(t::quote(cli)), fix_(std::move(fixtures) + "/") {}

  std::string fix(const std::string& name) const { return t::quote(fix_ + name); }
  std::string tmp(const std::string& name) const { return t::quote(dir_ / name); }
  void write(const std::string& name, const std::string& text) const { t::spit(dir_.path() / name, text); }

  /// Runs twice; records byte differences and the exit status.
  t::RunResult twice(CheckResult& r, const std::string& args) const {
    const auto a = t::run(cli_ + " " + args);
    const auto b = t::run(cli_ + " " + args);
    r.expect(a.out == b.out && a.status == b.status, "not reproducible: " + args);
    return a;
  }

  void expect_status(CheckResult& r, const std::string& args, int want) const {
    const auto got = twice(r, args);
    r.expect(got.status == want,
             "exit " + std::to_string(got.status) + " (want " + std::to_string(want) + "): " + args);
  }

 private:
  std::string cli_;
  std::string fix_;
  t::ScratchDir dir_;
};

bool parses(const std::string& text) { return json::accept(text); }

CheckResult cli_contract(const CliHarness& h) {
  CheckResult r{.suite = "cli"};

  // gen -> complete -> solve round trips.
  struct GenCase {
    std::string args;
    std::string file;
  };
  const std::vector<GenCase> posets{{"--family chain --n 5", "chain5.json"},
                                    {"--family antichain --n 4", "anti4.json"},
                                    {"--family boolean --k 3", "bool3.json"},
                                    {"--family divisor --m 60", "div60.json"},
                                    {"--family random --n 7 --density 0.4 --seed 11", "rand7.json"}};
  for (const auto& g : posets) {
    const auto out = h.twice(r, "gen " + g.args);
    r.expect(out.status == 0 && parses(out.out), "gen failed: " + g.args);
    h.write(g.file, out.out);
    const auto c = h.twice(r, "complete --input " + h.tmp(g.file) + " --emit-dot -");
    r.expect(c.status == 0, "complete failed on " + g.file);
    const auto e = h.twice(r, "export --format json --input " + h.tmp(g.file));
    r.expect(e.status == 0 && parses(e.out), "export json failed on " + g.file);
    h.twice(r, "export --input " + h.tmp(g.file));
  }

  const std::vector<GenCase> equations{{"--family randeq --seed 3", "eq3.json"},
                                       {"--family randeq --seed 42", "eq42.json"},
                                       {"--family gridfn --g 2 --v 3 --stencil smooth", "grid.json"}};
  for (const auto& g : equations) {
    const auto out = h.twice(r, "gen " + g.args);
    r.expect(out.status == 0 && parses(out.out), "gen failed: " + g.args);
    h.write(g.file, out.out);
    const json eq = json::parse(out.out);
    for (const auto& y : eq["codomain"]["elements"]) {
      h.write("target.json", json{{"principal", y}}.dump());
      const auto s = h.twice(r, "solve --global --input " + h.tmp(g.file) + " --target " + h.tmp("target.json"));
      r.expect((s.status == 0 || s.status == 1) && parses(s.out), "solve failed on " + g.file);
    }
  }

  // Fixed fixtures against the exit-code contract.
  const std::string pa = "solve --input " + h.fix("eq_point_antichain.json") + " --target ";
  h.expect_status(r, "complete --input " + h.fix("chain3.json"), 0);
  h.expect_status(r, "complete --input " + h.fix("diamond.json"), 0);
  h.expect_status(r, pa + h.fix("target_p.json"), 0);
  h.expect_status(r, pa + h.fix("target_q.json"), 1);
  h.expect_status(r, pa + h.fix("target_empty.json"), 1);
  h.expect_status(r, pa + h.fix("target_full.json"), 1);
  h.expect_status(r, pa + h.fix("target_unknown.json"), 2);
  h.write("noncut.json", R"({"cut": ["b"]})");
  h.expect_status(r, "solve --input " + h.fix("eq_chain_identity.json") + " --target " + h.tmp("noncut.json"), 2);
  h.expect_status(r, "complete --input " + h.fix("malformed.json"), 2);
  h.expect_status(r, "complete --input " + h.fix("cycle.json"), 2);
  h.expect_status(r, "complete --input " + h.fix("duplicate.json"), 2);
  h.expect_status(r, "check --suite unknown", 2);
  h.expect_status(r, "check --suite macneille --input " + h.fix("chain3.json"), 0);
  h.expect_status(r, "check --suite theorem41 --count 10", 0);
  h.expect_status(r, "gen --family boolean --k 20", 3);
  h.expect_status(r, "complete --input " + h.fix("diamond.json") + " --max-cuts 3", 3);
  return r;
}

// ---- 8 ---------------------------------------------------------------------

CheckResult deviation_flags(const CliHarness& h) {
  CheckResult r{.suite = "deviation flags"};
  const auto s =
      h.twice(r, "solve --input " + h.fix("eq_point_antichain.json") + " --target " + h.fix("target_empty.json"));
  r.expect(s.status == 1, "empty target should be unsolvable");
  if (!parses(s.out)) {
    r.expect(false, "solve output is not JSON");
    return r;
  }
  const json j = json::parse(s.out);
  const json& a = j["assumptionFlags"];
  const json& f = j["emptyFamilyFlags"];
  r.expect(a.value("quotientHasMinimum", false), "quotient minimum not reported");
  r.expect(a.value("deviatesFromNoMinNoMax", false), "deviation not reported");
  r.expect(!a.value("emptyCutInQuotientCompletion", true), "empty cut wrongly reported in quotient completion");
  r.expect(f.value("lowerFamilyEmpty", false), "empty lower family not reported");
  r.expect(!f.value("upperFamilyEmpty", true), "upper family wrongly reported empty");
  return r;
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <ordcomp-cli> <fixtures-dir>\n";
    return 2;
  }
  const CliHarness harness(argv[1], argv[2]);

  const std::vector<Criterion> criteria{
      {1, "cut calculus identities on the corpus", cut_calculus_on_corpus},
      {2, "completion matches brute force and verifies on the corpus", macneille_on_corpus},
      {3, "closed-form completion sizes", closed_form_sizes},
      {4, "local solvability vs exhaustive search on 100 equations", [] { return solver_on_equations(true); }},
      {5, "global solvability conditions agree on 100 equations", [] { return solver_on_equations(false); }},
      {6, "bound chain for 100 increasing cut maps", bound_chain_on_cut_maps},
      {7, "CLI determinism, round trips and exit codes", [&] { return cli_contract(harness); }},
      {8, "deviation flags on the point-to-antichain fixture", [&] { return deviation_flags(harness); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.expect(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s (%zu cases, %zu failures, %.2fs)\n", r.passed() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                r.cases, r.failures, secs);
    if (!r.passed()) {
      std::printf("       counterexample: %s\n", r.counterexample.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

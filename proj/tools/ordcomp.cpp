// ordcomp: command-line front end.
//
// Exit codes: 0 ok / solvable, 1 unsolvable or a failed check, 2 invalid
// input, 3 resource cap exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ordcomp/checks.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/io.hpp"
#include "ordcomp/kernels.hpp"

namespace {

using ordcomp::Errc;
using ordcomp::Error;
using ordcomp::Limits;
using ordcomp::io::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string input;
  std::string map;
  std::string target;
  std::string output;
  std::string emit_dot;
  std::string suite;
  std::string family;
  std::string stencil = "identity";
  std::string format = "dot";
  std::size_t max_arity = 20;
  std::size_t max_cuts = 4096;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t m = 0;
  double density = 0.3;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t g = 0;
  std::size_t v = 0;
  bool global = false;
  bool verbose = false;

  Limits limits() const {
    Limits l{.max_arity = max_arity, .max_cuts = max_cuts};
    l.validate();
    return l;
  }
};

void write_text(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw Error(Errc::InvalidInput, "cannot write '" + opt.output + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(Errc::InvalidInput, std::string("missing required flag ") + flag);
}

int cmd_complete(const Options& opt) {
  require(opt.input, "--input");
  const Limits limits = opt.limits();
  const auto p = ordcomp::io::poset_from_json(ordcomp::io::read_file(opt.input), limits);
  const auto c = ordcomp::macneille_completion(p, limits);
  const auto report = ordcomp::verify_macneille(c);
  const json out{{"schemaVersion", ordcomp::io::kSchemaVersion},
                 {"completion", ordcomp::io::to_json(c)},
                 {"cutCount", c.size()},
                 {"hasMinimum", ordcomp::has_minimum(p)},
                 {"hasMaximum", ordcomp::has_maximum(p)},
                 {"emptyIsCut", c.empty_is_cut()},
                 {"verification", ordcomp::io::to_json(report)}};
  if (!opt.emit_dot.empty()) write_file(opt.emit_dot, ordcomp::io::to_dot(c));
  write_text(opt, dump(out));
  return kExitOk;
}

int cmd_solve(const Options& opt) {
  const std::string& eq_path = opt.input.empty() ? opt.map : opt.input;
  require(eq_path, "--input");
  require(opt.target, "--target");
  const Limits limits = opt.limits();
  const auto e = ordcomp::io::equation_from_json(ordcomp::io::read_file(eq_path), limits);
  const auto f = ordcomp::io::target_from_json(e.codomain(), ordcomp::io::read_file(opt.target));
  const auto report = ordcomp::solve(e, f);
  json out = ordcomp::io::to_json(report, e);
  if (opt.global) out["globalCharacter"] = ordcomp::io::to_json(ordcomp::global_character(e), e);
  write_text(opt, dump(out));
  return report.solvable ? kExitOk : kExitNegative;
}

int cmd_gen(const Options& opt) {
  require(opt.family, "--family");
  const Limits limits = opt.limits();
  if (opt.family == "randeq") {
    write_text(opt, dump(ordcomp::io::to_json(ordcomp::gen::random_equation(opt.seed, limits))));
    return kExitOk;
  }
  ordcomp::gen::GeneratorSpec spec{.family = ordcomp::gen::parse_family(opt.family),
                                   .n = opt.n,
                                   .k = opt.k,
                                   .m = opt.m,
                                   .density = opt.density,
                                   .seed = opt.seed,
                                   .g = opt.g,
                                   .v = opt.v,
                                   .stencil = ordcomp::gen::parse_stencil(opt.stencil)};
  const auto inst = ordcomp::gen::generate(spec, limits);
  const json out = std::visit([](const auto& i) { return ordcomp::io::to_json(i); }, inst);
  write_text(opt, dump(out));
  return kExitOk;
}

int cmd_export(const Options& opt) {
  require(opt.input, "--input");
  const Limits limits = opt.limits();
  const auto p = ordcomp::io::poset_from_json(ordcomp::io::read_file(opt.input), limits);
  const auto c = ordcomp::macneille_completion(p, limits);
  if (opt.format == "json") {
    json out = ordcomp::io::to_json(c);
    out["schemaVersion"] = ordcomp::io::kSchemaVersion;
    write_text(opt, dump(out));
  } else if (opt.format == "dot") {
    write_text(opt, ordcomp::io::to_dot(c));
  } else {
    throw Error(Errc::InvalidInput, "--format must be dot or json");
  }
  if (!opt.emit_dot.empty()) write_file(opt.emit_dot, ordcomp::io::to_dot(c));
  return kExitOk;
}

// --- check -----------------------------------------------------------------

using ordcomp::checks::CheckResult;

CheckResult run_poset_suite(const Options& opt, bool calculus) {
  const Limits limits = opt.limits();
  CheckResult total{.suite = calculus ? "cut-calculus" : "macneille"};
  auto run = [&](const ordcomp::Poset& p) {
    total.merge(calculus ? ordcomp::checks::cut_calculus(p, limits) : ordcomp::checks::macneille(p, limits));
  };
  if (!opt.input.empty()) {
    run(ordcomp::io::poset_from_json(ordcomp::io::read_file(opt.input), limits));
  } else if (opt.count > 0) {
    for (std::size_t i = 0; i < opt.count; ++i) {
      const std::uint64_t s = opt.seed + i;
      run(ordcomp::gen::random_poset(1 + s % 8, 0.1 + 0.1 * static_cast<double>(s % 8), s, limits));
    }
  } else {
    for (const auto& p : ordcomp::checks::standard_corpus(limits)) run(p);
  }
  return total;
}

CheckResult run_equation_suite(const Options& opt, bool local) {
  const Limits limits = opt.limits();
  CheckResult total{.suite = local ? "local-solvability" : "global-solvability"};
  auto run = [&](const ordcomp::EquationInstance& e) {
    total.merge(local ? ordcomp::checks::local_solvability(e) : ordcomp::checks::global_solvability(e));
  };
  if (!opt.input.empty()) {
    run(ordcomp::io::equation_from_json(ordcomp::io::read_file(opt.input), limits));
    return total;
  }
  const std::size_t count = opt.count > 0 ? opt.count : 100;
  for (std::size_t i = 0; i < count; ++i) run(ordcomp::gen::random_equation(opt.seed + i, limits));
  return total;
}

CheckResult run_bound_chain_suite(const Options& opt) {
  const Limits limits = opt.limits();
  CheckResult total{.suite = "bound-chain"};
  if (!opt.map.empty()) {
    const auto phi = ordcomp::io::map_from_json(ordcomp::io::read_file(opt.map), limits);
    if (!ordcomp::is_increasing(phi)) throw Error(Errc::NotIncreasing, "map is not increasing");
    const ordcomp::ExtendedMap ext(phi, limits);
    total.merge(ordcomp::checks::bound_chain(ordcomp::extension_on_cuts(ext, limits), opt.seed));
    return total;
  }
  const std::size_t count = opt.count > 0 ? opt.count : 100;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + i;
    const auto src = ordcomp::macneille_completion(ordcomp::gen::random_poset(1 + s % 6, 0.3, s, limits), limits);
    const auto dst =
        ordcomp::macneille_completion(ordcomp::gen::random_poset(1 + (s / 6) % 6, 0.3, ~s, limits), limits);
    total.merge(ordcomp::checks::bound_chain(ordcomp::gen::random_increasing_cut_map(src, dst, s), s));
  }
  return total;
}

CheckResult run_extension_suite(const Options& opt) {
  const Limits limits = opt.limits();
  CheckResult total{.suite = "extension"};
  if (!opt.map.empty()) {
    total.merge(
        ordcomp::checks::extension(ordcomp::io::map_from_json(ordcomp::io::read_file(opt.map), limits), limits));
    return total;
  }
  const std::size_t count = opt.count > 0 ? opt.count : 100;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + i;
    const auto x = ordcomp::gen::random_poset(1 + s % 5, 0.4, s, limits);
    const auto y = ordcomp::gen::random_poset(1 + (s / 5) % 5, 0.4, ~s, limits);
    total.merge(ordcomp::checks::extension(ordcomp::gen::random_increasing_map(x, y, s), limits));
  }
  return total;
}

// Older names kept working for scripts.
std::string canonical_suite(const std::string& name) {
  if (name == "theorem41") return "local-solvability";
  if (name == "theorem42") return "global-solvability";
  return name;
}

int cmd_check(const Options& opt) {
  const std::string suite = canonical_suite(opt.suite);
  const auto& names = ordcomp::checks::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(Errc::UnknownSuite, "unknown suite '" + opt.suite + "'");
  }
  std::vector<CheckResult> results;
  const bool all = suite == "all";
  if (all || suite == "cut-calculus") results.push_back(run_poset_suite(opt, true));
  if (all || suite == "macneille") results.push_back(run_poset_suite(opt, false));
  if (all || suite == "local-solvability") results.push_back(run_equation_suite(opt, true));
  if (all || suite == "global-solvability") results.push_back(run_equation_suite(opt, false));
  if (all || suite == "bound-chain") results.push_back(run_bound_chain_suite(opt));
  if (all || suite == "extension") results.push_back(run_extension_suite(opt));
  if (all || suite == "kernels") {
    results.push_back(ordcomp::checks::simd_kernels(opt.seed, opt.count > 0 ? opt.count : 200));
  }

  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    text += r.suite + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
            " failures: " + (r.passed() ? "PASS" : "FAIL") + "\n";
    if (!r.passed()) text += "  counterexample: " + r.counterexample + "\n";
    ok = ok && r.passed();
  }
  write_text(opt, text);
  return ok ? kExitOk : kExitNegative;
}

void add_limits(CLI::App* cmd, Options& opt) {
  cmd->add_option("--max-arity", opt.max_arity, "Largest accepted carrier (<= 64)");
  cmd->add_option("--max-cuts", opt.max_cuts, "Largest accepted completion");
  cmd->add_option("-o,--output", opt.output, "Write the result here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order completions of finite posets and equations T(A) = F"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("-v,--verbose", opt.verbose, "Report the SIMD kernel variant on stderr");

  auto* complete = app.add_subcommand("complete", "MacNeille completion of a poset");
  complete->add_option("--input", opt.input, "Poset JSON")->required();
  complete->add_option("--emit-dot", opt.emit_dot, "Also write the Hasse diagram as DOT ('-' for stdout)");
  add_limits(complete, opt);

  auto* solve = app.add_subcommand("solve", "Decide and solve T#(A) = F");
  solve->add_option("--input,--map", opt.input, "Equation JSON")->required();
  solve->add_option("--target", opt.target, "Target JSON")->required();
  solve->add_flag("--global", opt.global, "Include the global surjectivity report");
  add_limits(solve, opt);

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check
      ->add_option("--suite", opt.suite,
                   "cut-calculus|macneille|local-solvability|global-solvability|bound-chain|extension|kernels|all")
      ->required();
  check->add_option("--input", opt.input, "Poset or equation JSON to check instead of the default batch");
  check->add_option("--map", opt.map, "Map JSON for the extension and bound-chain suites");
  check->add_option("--seed", opt.seed, "First seed of the random batch");
  check->add_option("--count", opt.count, "Size of the random batch");
  add_limits(check, opt);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", opt.family, "chain|antichain|boolean|divisor|random|gridfn|randeq")->required();
  gen->add_option("--n", opt.n, "Elements (chain, antichain, random)");
  gen->add_option("--k", opt.k, "Atoms (boolean)");
  gen->add_option("--m", opt.m, "Number whose divisors are taken (divisor)");
  gen->add_option("--density", opt.density, "Edge probability (random)");
  gen->add_option("--seed", opt.seed, "Seed (random, randeq)");
  gen->add_option("--g", opt.g, "Grid points (gridfn)");
  gen->add_option("--v", opt.v, "Levels (gridfn)");
  gen->add_option("--stencil", opt.stencil, "identity|shift|raise|smooth|max-neighbor (gridfn)");
  add_limits(gen, opt);

  auto* exp = app.add_subcommand("export", "Export a completion as DOT or JSON");
  exp->add_option("--input", opt.input, "Poset JSON")->required();
  exp->add_option("--format", opt.format, "dot|json");
  exp->add_option("--emit-dot", opt.emit_dot, "Also write DOT to this path");
  add_limits(exp, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  if (opt.verbose) std::cerr << "kernels: " << ordcomp::kernels::name(ordcomp::kernels::active()) << "\n";

  try {
    if (complete->parsed()) return cmd_complete(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (check->parsed()) return cmd_check(opt);
    if (gen->parsed()) return cmd_gen(opt);
    if (exp->parsed()) return cmd_export(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ResourceCap ? kExitCap : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

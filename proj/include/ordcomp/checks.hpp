#pragma once

// Property suites cross-checking the fast paths against the oracle and the
// algebraic identities of the bound operators. Shared by `ordcomp check` and
// the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordcomp/mapext.hpp"
#include "ordcomp/solver.hpp"

namespace ordcomp::checks {

struct CheckResult {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failure seen; suites visit instances in increasing size, so it is
  /// also a small one.
  std::string counterexample;

  bool passed() const noexcept { return failures == 0; }
  void expect(bool ok, const std::string& what);
  void merge(const CheckResult& other);
};

/// Upper/lower bound identities: empty-set conventions, antitonicity,
/// extensivity and idempotence of the closures, principal sets, least
/// closure, the cut list as the set of all closures, and suprema/infima of
/// cut families. Exhaustive over subsets for arity <= 12.
CheckResult cut_calculus(const Poset& p, const Limits& limits = {});

/// Completion equals the brute-force cut list and passes verify_macneille.
CheckResult macneille(const Poset& p, const Limits& limits = {});

/// Solver against brute_solve for every cut F of the codomain, plus the
/// inclusion chain and sandwich bounds.
CheckResult local_solvability(const EquationInstance& e);

/// Both surjectivity conditions agree; when they hold, T^# is an order
/// isomorphism onto the whole codomain completion.
CheckResult global_solvability(const EquationInstance& e);

/// The bound chain μ(inf E) ⊆ inf μ(E) ⊆ sup μ(E) ⊆ μ(sup E) on every
/// nonvoid family (exhaustive for <= 10 source cuts, sampled otherwise).
CheckResult bound_chain(const CutMap& mu, std::uint64_t seed = 0);

CheckResult extension(const PosetMap& phi, const Limits& limits = {});

/// Scalar and SIMD kernels agree on random inputs.
CheckResult simd_kernels(std::uint64_t seed, std::size_t rounds = 200);

/// The fixed corpus used by the acceptance suites: chains and antichains up
/// to 10, boolean(k <= 4), divisor(m <= 60), and 200 seeded random posets
/// with n <= 8.
std::vector<Poset> standard_corpus(const Limits& limits = {});

/// Names accepted by `ordcomp check --suite`.
const std::vector<std::string>& suite_names();

}  // namespace ordcomp::checks

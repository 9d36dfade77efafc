#pragma once

// Deliberately naive reference implementations. Nothing here touches the
// bitmask tables or kernels of the fast paths: bounds are recomputed from
// Poset::leq with plain loops over std::vector<bool>.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordcomp/completion.hpp"
#include "ordcomp/solver.hpp"

namespace ordcomp::oracle {

inline constexpr std::size_t kMaxOracleArity = 16;

using Members = std::vector<bool>;

Members naive_upper_bounds(const Poset& p, const Members& a);
Members naive_lower_bounds(const Poset& p, const Members& a);
Members naive_closure(const Poset& p, const Members& a);

Members to_members(Mask m, std::size_t n);
Mask to_mask(const Members& m);

/// Every subset A with A^ul = A, by scanning all 2^n subsets, in canonical
/// order. Throws Error(ResourceCap) above kMaxOracleArity.
std::vector<Mask> brute_cuts(const Poset& p);

enum class Which { Sup, Inf };

/// Least upper (greatest lower) bound of `family` found by scanning every
/// cut of `c` under inclusion; returns its index. Throws Error(NoBound).
std::size_t brute_bound(const CompletedPoset& c, std::span<const std::size_t> family, Which which);

/// Tries every cut A of the quotient (enumerated by brute_cuts) and returns
/// the one whose image (T_≈(A))^ul, computed naively, equals f. Throws
/// Error(MultipleSolutions) if more than one qualifies.
std::optional<Mask> brute_solve(const EquationInstance& e, Mask f);

}  // namespace ordcomp::oracle

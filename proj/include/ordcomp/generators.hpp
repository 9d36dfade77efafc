#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>

#include "ordcomp/mapext.hpp"
#include "ordcomp/solver.hpp"

namespace ordcomp::gen {

enum class Family { Chain, Antichain, Boolean, Divisor, Random, Gridfn };

/// Local monotone update rules for the grid-function family. Each maps a
/// function u : {0..g-1} -> {0..v-1} to another such function, pointwise
/// monotone in u.
enum class Stencil {
  Identity,     // u(i)
  Shift,        // u((i + 1) mod g)
  Raise,        // min(u(i) + 1, v - 1)
  Smooth,       // floor((u(i-1) + u(i) + u(i+1)) / 3), clamped at the ends
  MaxNeighbor,  // max(u(i), u(i+1)), clamped at the end
};

Family parse_family(std::string_view name);
std::string_view to_string(Family f) noexcept;
Stencil parse_stencil(std::string_view name);
std::string_view to_string(Stencil s) noexcept;

struct GeneratorSpec {
  Family family = Family::Chain;
  std::size_t n = 0;       // chain, antichain, random
  std::size_t k = 0;       // boolean
  std::uint64_t m = 0;     // divisor
  double density = 0.3;    // random
  std::uint64_t seed = 0;  // random
  std::size_t g = 0;       // gridfn: grid points
  std::size_t v = 0;       // gridfn: levels
  Stencil stencil = Stencil::Identity;
};

using Instance = std::variant<Poset, EquationInstance>;

/// Same spec, same instance. Throws Error(BadSpec) or Error(ResourceCap).
Instance generate(const GeneratorSpec& spec, const Limits& limits = {});

Poset chain(std::size_t n, const Limits& limits = {});
Poset antichain(std::size_t n, const Limits& limits = {});
/// Subsets of {0..k-1} ordered by inclusion.
Poset boolean_lattice(std::size_t k, const Limits& limits = {});
/// Divisors of m ordered by divisibility.
Poset divisor_lattice(std::uint64_t m, const Limits& limits = {});
/// Transitive closure of a random DAG on 0..n-1 where each edge i -> j,
/// i < j, is present with probability `density`. Uses std::mt19937_64 and
/// maps each draw to [0, 1) as (x >> 11) * 2^-53.
Poset random_poset(std::size_t n, double density, std::uint64_t seed, const Limits& limits = {});
/// Pointwise-ordered functions from g grid points to v levels.
Poset grid_functions(std::size_t g, std::size_t v, const Limits& limits = {});
/// Equation whose operator applies `stencil` to every grid function.
EquationInstance gridfn(std::size_t g, std::size_t v, Stencil stencil, const Limits& limits = {});

/// Small random equation: |X|, |Y| in [1, 6], Y random with density 0.35,
/// T uniform. Used for the solver property suites.
EquationInstance random_equation(std::uint64_t seed, const Limits& limits = {});

/// Random increasing map between the cut lattices of two completions.
CutMap random_increasing_cut_map(const CompletedPoset& source, const CompletedPoset& target, std::uint64_t seed);

/// Random increasing poset map source -> target, when one exists beyond
/// constant maps; built greedily along a linear extension.
PosetMap random_increasing_map(const Poset& source, const Poset& target, std::uint64_t seed);

}  // namespace ordcomp::gen

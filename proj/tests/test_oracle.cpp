#include "doctest.h"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/oracle.hpp"

using namespace ordcomp;

TEST_CASE("naive bounds agree with the table-driven operators") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Poset p = gen::random_poset(1 + seed % 10, 0.35, seed);
    const std::size_t n = p.size();
    for (Mask a = 0; a <= full_mask(n); a += 1 + (seed % 3)) {
      const auto m = oracle::to_members(a, n);
      CHECK(oracle::to_mask(oracle::naive_upper_bounds(p, m)) == p.upper_of(a));
      CHECK(oracle::to_mask(oracle::naive_lower_bounds(p, m)) == p.lower_of(a));
      CHECK(oracle::to_mask(oracle::naive_closure(p, m)) == p.closure_of(a));
    }
  }
}

TEST_CASE("brute cuts of small known posets") {
  CHECK(oracle::brute_cuts(gen::chain(3)) == std::vector<Mask>{0b001, 0b011, 0b111});
  CHECK(oracle::brute_cuts(gen::antichain(2)) == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
  CHECK_THROWS_AS(oracle::brute_cuts(gen::chain(17, Limits{.max_arity = 17})), Error);
}

TEST_CASE("brute bounds and missing bounds") {
  const auto c = macneille_completion(gen::antichain(3));
  const std::vector<std::size_t> atoms{c.embedding(0), c.embedding(2)};
  CHECK(c.mask(oracle::brute_bound(c, atoms, oracle::Which::Sup)) == 0b111);
  CHECK(c.mask(oracle::brute_bound(c, atoms, oracle::Which::Inf)) == 0);
}

TEST_CASE("brute solve on the point-to-antichain equation") {
  const Poset y = gen::antichain(2);
  const auto e = EquationInstance::build(CarrierSet({"u"}), y, {0});
  CHECK(oracle::brute_solve(e, 0b01) == Mask{0b1});
  CHECK(oracle::brute_solve(e, 0b10) == std::nullopt);
  CHECK(oracle::brute_solve(e, 0) == std::nullopt);
}

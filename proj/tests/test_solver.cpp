#include <vector>

#include "doctest.h"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/oracle.hpp"
#include "ordcomp/solver.hpp"

using namespace ordcomp;

namespace {

Poset chain_pqr() { return Poset::build({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}}, RelationKind::Covers); }

EquationInstance identity_on(const Poset& y) {
  std::vector<std::size_t> id(y.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return EquationInstance::build(CarrierSet(y.labels()), y, id);
}

}  // namespace

TEST_CASE("one fibre gives a one-element quotient") {
  const Poset y = Poset::build({"p", "q"}, {{"p", "q"}}, RelationKind::Covers);
  const auto e = EquationInstance::build(CarrierSet({"u", "v"}), y, {0, 0});
  CHECK(e.quotient().size() == 1);
  CHECK(e.quotient().classes()[0] == 0b11);
  CHECK(e.quotient_completion().size() == 1);
}

TEST_CASE("fibres group by image and carry the pulled-back order") {
  const auto e = EquationInstance::build(CarrierSet({"u", "v", "w"}), chain_pqr(), {0, 1, 1});
  REQUIRE(e.quotient().size() == 2);
  CHECK(e.quotient().classes()[0] == 0b001);
  CHECK(e.quotient().classes()[1] == 0b110);
  CHECK(e.quotient().class_of(2) == 1);
  CHECK(e.quotient().order().leq(0, 1));
  CHECK_FALSE(e.quotient().order().leq(1, 0));
  CHECK(is_oie(e.class_map().base()));
}

TEST_CASE("injective map onto an antichain keeps the antichain") {
  const Poset y = gen::antichain(3);
  const auto e = EquationInstance::build(CarrierSet({"x", "y", "z"}), y, {2, 0, 1});
  CHECK(order_isomorphism(e.quotient().order(), y).has_value());
}

TEST_CASE("extension sends principal cuts to principal cuts") {
  const auto e = EquationInstance::build(CarrierSet({"u", "v", "w"}), chain_pqr(), {0, 1, 1});
  const auto& xc = e.quotient_completion();
  const auto& yc = e.codomain_completion();
  for (std::size_t u = 0; u < e.quotient().size(); ++u) {
    const Cut a = xc.cut(xc.embedding(u));
    CHECK(t_sharp(e, a) == yc.cut(yc.embedding(e.class_map().base()(u))));
  }
}

TEST_CASE("empty cut maps to the least cut") {
  const auto e = EquationInstance::build(CarrierSet({"u", "v"}), gen::antichain(3), {0, 1});
  REQUIRE(e.quotient_completion().empty_is_cut());
  CHECK(t_sharp(e, e.quotient_completion().cut(0)).mask() == 0);
}

TEST_CASE("identity equation solves every target with itself") {
  for (const Poset& y : {gen::chain(4), gen::antichain(3), gen::boolean_lattice(2)}) {
    const auto e = identity_on(y);
    const auto& yc = e.codomain_completion();
    for (std::size_t f = 0; f < yc.size(); ++f) {
      const auto r = solve(e, y.subset(yc.mask(f)));
      REQUIRE(r.solvable);
      CHECK(r.solution->mask() == yc.mask(f));
      CHECK(t_sharp(e, *r.solution).mask() == yc.mask(f));
    }
    const auto g = global_character(e);
    CHECK(g.image_contains_principal);
    CHECK(g.image_is_everything);
    CHECK(g.order_isomorphism == true);
  }
}

TEST_CASE("point into a two-element antichain") {
  const Poset y = Poset::build({"p", "q"}, {}, RelationKind::Covers);
  const auto e = EquationInstance::build(CarrierSet({"u"}), y, {0});
  REQUIRE(e.quotient_completion().size() == 1);

  const auto at_p = solve(e, y.subset(0b01));
  CHECK(at_p.solvable);
  CHECK(at_p.solution->mask() == 0b1);

  const auto at_q = solve(e, y.subset(0b10));
  CHECK_FALSE(at_q.solvable);
  CHECK(at_q.sup_of_images.mask() == 0);
  CHECK(at_q.inf_of_images.mask() == 0b11);
  CHECK(at_q.upper_family_empty);

  // The empty set is a cut of Y but the one-class quotient has a minimum,
  // so no quotient cut maps below it.
  const auto at_empty = solve(e, y.subset(0));
  CHECK_FALSE(at_empty.solvable);
  CHECK(at_empty.lower_family_empty);
  CHECK_FALSE(at_empty.upper_family_empty);
  CHECK(at_empty.assumptions.quotient_has_minimum);
  CHECK(at_empty.assumptions.deviates());
  CHECK_FALSE(at_empty.assumptions.empty_cut_in_quotient_completion);
  CHECK(at_empty.assumptions.empty_cut_in_codomain_completion);
}

TEST_CASE("a non-cut target is rejected") {
  const auto e = identity_on(chain_pqr());
  try {
    solve(e, e.codomain().subset(0b010));
    FAIL("accepted a non-cut");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::InvalidCut);
  }
}

TEST_CASE("constant map to a 2-chain misses the top") {
  const Poset y = Poset::build({"lo", "hi"}, {{"lo", "hi"}}, RelationKind::Covers);
  const auto e = EquationInstance::build(CarrierSet({"a", "b"}), y, {0, 0});
  const auto g = global_character(e);
  CHECK_FALSE(g.image_contains_principal);
  CHECK_FALSE(g.image_is_everything);
  CHECK(g.conditions_agree);
  CHECK(g.missing_principal == std::vector<std::size_t>{1});
  CHECK(oracle::brute_solve(e, 0b01) == Mask{0b1});
  CHECK(oracle::brute_solve(e, 0b11) == std::nullopt);
  CHECK(solve(e, y.subset(0b01)).solvable);
  CHECK_FALSE(solve(e, y.subset(0b11)).solvable);
}

TEST_CASE("bijection onto an antichain is globally solvable") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Poset y = gen::antichain(n);
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = n - 1 - i;
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
    const auto g = global_character(EquationInstance::build(CarrierSet(xs), y, map));
    CHECK(g.image_contains_principal);
    CHECK(g.image_is_everything);
    CHECK(g.quotient_cuts == g.codomain_cuts);
    CHECK(g.order_isomorphism == true);
  }
}

TEST_CASE("solver agrees with exhaustive search and keeps the sandwich") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto e = gen::random_equation(seed);
    const auto& yc = e.codomain_completion();
    for (std::size_t f = 0; f < yc.size(); ++f) {
      const Mask fm = yc.mask(f);
      const auto r = solve(e, e.codomain().subset(fm));
      CHECK(is_subset(r.sup_of_images.mask(), fm));
      CHECK(is_subset(fm, r.inf_of_images.mask()));
      const auto brute = oracle::brute_solve(e, fm);
      CHECK(r.solvable == brute.has_value());
      if (r.solvable && brute) CHECK(r.solution->mask() == *brute);
    }
  }
}

TEST_CASE("caps apply to the domain as well") {
  std::vector<std::string> xs;
  for (int i = 0; i < 5; ++i) xs.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(EquationInstance::build(CarrierSet(xs), gen::chain(2), {0, 0, 0, 1, 1}, Limits{.max_arity = 4}),
                  Error);
}

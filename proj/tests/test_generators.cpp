#include "doctest.h"
#include "ordcomp/completion.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/io.hpp"

using namespace ordcomp;

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

TEST_CASE("families have the expected shape") {
  CHECK(gen::chain(3).covers().size() == 2);
  CHECK(gen::antichain(4).covers().empty());
  CHECK(gen::boolean_lattice(3).size() == 8);
  CHECK(gen::boolean_lattice(2).label(3) == "{0,1}");
  CHECK(gen::divisor_lattice(12).size() == 6);
  CHECK(gen::divisor_lattice(12).labels().back() == "12");
  CHECK(gen::grid_functions(2, 3).size() == 9);
}

TEST_CASE("product of two primes divides like boolean(2)") {
  for (std::uint64_t m : {6, 10, 15, 35, 77}) {
    CHECK(order_isomorphism(gen::divisor_lattice(m), gen::boolean_lattice(2)).has_value());
  }
  CHECK(order_isomorphism(gen::divisor_lattice(210), gen::boolean_lattice(4)).has_value());
}

TEST_CASE("boolean(2) is self-complete") {
  const Poset b = gen::boolean_lattice(2);
  const auto c = macneille_completion(b);
  CHECK(c.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c.mask(c.embedding(i)) == b.down(i));
}

TEST_CASE("same spec gives the same instance") {
  const auto a = gen::random_poset(7, 0.4, 99);
  const auto b = gen::random_poset(7, 0.4, 99);
  CHECK(io::to_json(a) == io::to_json(b));
  CHECK(io::to_json(gen::random_equation(5)) == io::to_json(gen::random_equation(5)));
  CHECK(io::to_json(gen::random_poset(7, 0.4, 98)) != io::to_json(a));
}

TEST_CASE("random equations stay within six elements per side") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto e = gen::random_equation(s);
    CHECK(e.domain().size() >= 1);
    CHECK(e.domain().size() <= 6);
    CHECK(e.codomain().size() <= 6);
  }
}

TEST_CASE("gridfn identity on 2x2 is a 4-element globally solvable equation") {
  const auto e = gen::gridfn(2, 2, gen::Stencil::Identity);
  CHECK(e.codomain().size() == 4);
  CHECK(has_minimum(e.codomain()));
  CHECK(has_maximum(e.codomain()));
  const auto g = global_character(e);
  CHECK(g.image_is_everything);
  CHECK(g.order_isomorphism == true);
}

TEST_CASE("gridfn stencils are monotone") {
  for (auto s : {gen::Stencil::Shift, gen::Stencil::Raise, gen::Stencil::Smooth, gen::Stencil::MaxNeighbor}) {
    CAPTURE(gen::to_string(s));
    const auto e = gen::gridfn(3, 2, s);
    CHECK(is_increasing(
        PosetMap(e.codomain(), e.codomain(), {e.map().assignment().begin(), e.map().assignment().end()})));
  }
  // Raise collapses the top two levels, so the top is hit but the bottom is not.
  CHECK_FALSE(global_character(gen::gridfn(2, 3, gen::Stencil::Raise)).image_contains_principal);
}

TEST_CASE("bad specs and caps") {
  CHECK(code_of([] { gen::parse_family("tree"); }) == Errc::BadSpec);
  CHECK(code_of([] { gen::parse_stencil("blur"); }) == Errc::BadSpec);
  CHECK(code_of([] { gen::chain(0); }) == Errc::BadSpec);
  CHECK(code_of([] { gen::random_poset(3, 1.5, 0); }) == Errc::BadSpec);
  CHECK(code_of([] { gen::boolean_lattice(20); }) == Errc::ResourceCap);
  CHECK(code_of([] { gen::grid_functions(13, 2, Limits{.max_arity = 64}); }) == Errc::ResourceCap);
  CHECK(code_of([] { gen::chain(21); }) == Errc::ResourceCap);
}

TEST_CASE("random increasing maps are increasing") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto x = gen::random_poset(1 + s % 6, 0.5, s);
    const auto y = gen::random_poset(1 + s % 5, 0.5, s + 1);
    CHECK(is_increasing(gen::random_increasing_map(x, y, s)));
  }
}

TEST_CASE("random increasing cut maps are increasing") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto src = macneille_completion(gen::random_poset(1 + s % 6, 0.3, s));
    const auto dst = macneille_completion(gen::random_poset(1 + s % 4, 0.3, s + 7));
    CHECK(is_increasing(gen::random_increasing_cut_map(src, dst, s)));
  }
}

#include "ordcomp/checks.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ordcomp/completion.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/generators.hpp"
#include "ordcomp/kernels.hpp"
#include "ordcomp/oracle.hpp"

namespace ordcomp::checks {

namespace {

constexpr std::size_t kExhaustiveSubsetArity = 16;
constexpr std::size_t kSampledSubsets = 4096;
constexpr std::size_t kExhaustiveFamilyCuts = 12;
constexpr std::size_t kSampledFamilies = 512;
constexpr std::size_t kExhaustiveBoundChainCuts = 10;
constexpr std::size_t kSampledBoundChainFamilies = 256;

std::string show(const std::vector<std::string>& labels, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) s += ",";
    s += labels[i];
    first = false;
  });
  return s + "}";
}

std::vector<Mask> subsets_to_check(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Mask> out;
  if (n <= kExhaustiveSubsetArity) {
    for (Mask s = 0; s < (Mask{1} << n); ++s) out.push_back(s);
    return out;
  }
  out.push_back(0);
  out.push_back(p.full_mask());
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit(i));
  std::mt19937_64 rng(n);
  for (std::size_t k = 0; k < kSampledSubsets; ++k) out.push_back(rng() & p.full_mask());
  return out;
}

std::vector<std::vector<std::size_t>> families_to_check(std::size_t cuts, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> out;
  if (cuts <= kExhaustiveFamilyCuts) {
    for (Mask sel = 0; sel < (Mask{1} << cuts); ++sel) out.push_back(bit_indices(sel));
    return out;
  }
  out.emplace_back();
  for (std::size_t i = 0; i < cuts; ++i) {
    out.push_back({i});
    for (std::size_t j = i + 1; j < cuts && cuts <= 128; ++j) out.push_back({i, j});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < kSampledFamilies; ++k) {
    std::vector<std::size_t> f(1 + rng() % std::min<std::size_t>(cuts, 6));
    for (auto& i : f) i = rng() % cuts;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

void CheckResult::expect(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (counterexample.empty()) counterexample = what;
}

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  failures += other.failures;
  if (counterexample.empty() && !other.counterexample.empty()) counterexample = other.counterexample;
}

CheckResult cut_calculus(const Poset& p, const Limits& limits) {
  CheckResult r{.suite = "cut-calculus"};
  const std::size_t n = p.size();
  const Mask full = p.full_mask();
  const auto& labels = p.labels();
  const CompletedPoset c = macneille_completion(p, limits);
  const auto subsets = subsets_to_check(p);
  const bool exhaustive = n <= kExhaustiveSubsetArity;
  std::set<Mask> closures;

  for (Mask a : subsets) {
    const std::string at = " at A=" + show(labels, a);
    const Mask au = p.upper_of(a);
    const Mask al = p.lower_of(a);
    const Mask aul = p.lower_of(au);
    const Mask alu = p.upper_of(al);
    closures.insert(aul);

    // Fast operators against the double-loop definitions.
    const auto members = oracle::to_members(a, n);
    r.expect(oracle::to_mask(oracle::naive_upper_bounds(p, members)) == au, "A^u differs from naive" + at);
    r.expect(oracle::to_mask(oracle::naive_lower_bounds(p, members)) == al, "A^l differs from naive" + at);

    if (a == 0) r.expect(au == full && al == full, "empty-set convention fails" + at);
    bool bounded_above = false, bounded_below = false;
    for (std::size_t x = 0; x < n; ++x) {
      bool above = true, below = true;
      for_each_bit(a, [&](std::size_t i) {
        above = above && p.leq(i, x);
        below = below && p.leq(x, i);
      });
      bounded_above = bounded_above || above;
      bounded_below = bounded_below || below;
    }
    r.expect((au == 0) == !bounded_above, "A^u = {} iff unbounded above fails" + at);
    r.expect((al == 0) == !bounded_below, "A^l = {} iff unbounded below fails" + at);

    for_each_bit(full & ~a, [&](std::size_t x) {
      const Mask b = a | bit(x);
      r.expect(is_subset(p.upper_of(b), au) && is_subset(p.lower_of(b), al), "antitonicity fails" + at);
    });
    r.expect(is_subset(a, aul) && is_subset(a, alu), "A is not inside A^ul and A^lu" + at);
    r.expect(p.upper_of(aul) == au && p.lower_of(alu) == al, "A^ulu = A^u or A^lul = A^l fails" + at);

    r.expect(p.closure_of(aul) == aul, "A^ul is not a cut" + at);
    for (Mask b : c.cut_masks()) {
      if (is_subset(a, b)) r.expect(is_subset(aul, b), "A^ul is not the least cut above A" + at);
      if (is_subset(b, a)) r.expect(is_subset(b, aul), "cut below A escapes A^ul" + at);
    }

    std::vector<std::size_t> principal;
    for_each_bit(a, [&](std::size_t x) { principal.push_back(c.embedding(x)); });
    r.expect(c.mask(sup_index(c, principal)) == aul, "A^ul differs from sup of its principal cuts" + at);
  }
  if (exhaustive) {
    r.expect(closures == std::set<Mask>(c.cut_masks().begin(), c.cut_masks().end()),
             "the closures A^ul are not exactly the cuts");
  }

  for (std::size_t x = 0; x < n; ++x) {
    const std::string at = " at x=" + labels[x];
    r.expect(p.upper_of(bit(x)) == p.up(x) && p.lower_of(bit(x)) == p.down(x), "{x}^u or {x}^l wrong" + at);
    r.expect(p.lower_of(p.up(x)) == p.down(x) && p.upper_of(p.down(x)) == p.up(x), "[x>^l or <x]^u wrong" + at);
    r.expect(p.closure_of(bit(x)) == p.down(x) && p.upper_of(p.lower_of(bit(x))) == p.up(x),
             "{x}^ul or {x}^lu wrong" + at);
  }

  for (const auto& fam : families_to_check(c.size(), n)) {
    const std::string at = " for a family of " + std::to_string(fam.size()) + " cuts";
    Mask uni = 0, meet = full;
    for (auto i : fam) {
      uni |= c.mask(i);
      meet &= c.mask(i);
    }
    const Mask sup = c.mask(sup_index(c, fam));
    r.expect(sup == p.closure_of(uni), "sup differs from (union)^ul" + at);
    r.expect(sup == c.mask(oracle::brute_bound(c, fam, oracle::Which::Sup)), "sup is not the least cut above" + at);
    r.expect(p.closure_of(meet) == meet, "intersection of cuts is not a cut" + at);
    r.expect(c.find(meet).has_value() && c.mask(inf_index(c, fam)) == meet, "inf differs from intersection" + at);
    r.expect(meet == c.mask(oracle::brute_bound(c, fam, oracle::Which::Inf)), "inf is not the greatest cut below" + at);
  }
  return r;
}

CheckResult macneille(const Poset& p, const Limits& limits) {
  CheckResult r{.suite = "macneille"};
  const CompletedPoset c = macneille_completion(p, limits);
  const auto brute = oracle::brute_cuts(p);
  r.expect(std::vector<Mask>(c.cut_masks().begin(), c.cut_masks().end()) == brute,
           "completion differs from brute-force cuts (" + std::to_string(c.size()) + " vs " +
               std::to_string(brute.size()) + ")");
  r.expect(c.empty_is_cut() == !has_minimum(p), "empty cut present iff no minimum fails");
  r.expect(c.mask(c.top()) == p.full_mask(), "full carrier is not the top cut");
  const MacNeilleReport v = verify_macneille(c);
  r.expect(v.complete, "completeness: " + v.counterexample);
  r.expect(v.embedding_oie, "embedding: " + v.counterexample);
  r.expect(v.preserves_bounds, "preservation: " + v.counterexample);
  r.expect(v.density, "density: " + v.counterexample);
  r.expect(v.density_inf_empty_family == (has_maximum(p) ? 0U : 1U),
           "inf-side density family empty for a cut other than a maximum-free carrier");
  return r;
}

CheckResult local_solvability(const EquationInstance& e) {
  CheckResult r{.suite = "local-solvability"};
  const auto& yc = e.codomain_completion();
  const auto& xc = e.quotient_completion();
  const auto& yl = e.codomain().labels();
  const auto img = e.image_table();

  r.expect(is_oie(e.class_map().base()), "class map is not an order embedding");
  for (std::size_t u = 0; u < e.quotient().size(); ++u) {
    r.expect(img[xc.embedding(u)] == yc.embedding(e.class_map().base()(u)),
             "T# of a principal cut is not the principal cut of the image");
  }
  for (std::size_t a = 0; a < xc.size(); ++a) {
    for (std::size_t b = a + 1; b < xc.size(); ++b) r.expect(img[a] != img[b], "T# is not injective on cuts");
  }

  for (std::size_t k = 0; k < yc.size(); ++k) {
    const Mask f = yc.mask(k);
    const std::string at = " at F=" + show(yl, f);
    const SolveReport s = solve(e, e.codomain().subset(f));
    std::optional<Mask> brute;
    try {
      brute = oracle::brute_solve(e, f);
    } catch (const Error& err) {
      r.expect(false, std::string(err.what()) + at);
      continue;
    }
    r.expect(s.solvable == brute.has_value(), "solvability disagrees with exhaustive search" + at);
    if (s.solvable && brute) {
      r.expect(s.solution->mask() == *brute, "solution differs from exhaustive search" + at);
      r.expect(t_sharp(e, *s.solution).mask() == f, "T#(solution) != F" + at);
    }
    const Mask t_sup = yc.mask(img[xc.index_of(s.sup_of_lower)]);
    const Mask t_inf = yc.mask(img[xc.index_of(s.inf_of_upper)]);
    r.expect(
        is_subset(s.sup_of_images.mask(), t_sup) && is_subset(t_sup, t_inf) && is_subset(t_inf, s.inf_of_images.mask()),
        "inclusion chain fails" + at);
    r.expect(is_subset(s.sup_of_images.mask(), f) && is_subset(f, s.inf_of_images.mask()), "sandwich fails" + at);
  }
  return r;
}

CheckResult global_solvability(const EquationInstance& e) {
  CheckResult r{.suite = "global-solvability"};
  const GlobalReport g = global_character(e);
  r.expect(g.conditions_agree, "principal-cut surjectivity and full surjectivity disagree");
  if (g.image_is_everything) {
    r.expect(g.order_isomorphism.value_or(false), "T# is surjective but not an order isomorphism");
    r.expect(g.image_size == g.codomain_cuts && g.quotient_cuts == g.codomain_cuts, "image size mismatch");
  }

  // Naive recomputation of both conditions.
  const Poset& q = e.quotient().order();
  const Poset& y = e.codomain();
  std::set<Mask> image;
  for (Mask a : oracle::brute_cuts(q)) {
    oracle::Members m(y.size(), false);
    for (std::size_t u = 0; u < q.size(); ++u) {
      if (contains(a, u)) m[e.map()(e.quotient().representatives()[u])] = true;
    }
    image.insert(oracle::to_mask(oracle::naive_closure(y, m)));
  }
  bool principal = true;
  for (std::size_t v = 0; v < y.size(); ++v) principal = principal && image.count(y.down(v)) > 0;
  const auto all = oracle::brute_cuts(y);
  const bool everything = image == std::set<Mask>(all.begin(), all.end());
  r.expect(principal == g.image_contains_principal, "principal-cut condition differs from naive recomputation");
  r.expect(everything == g.image_is_everything, "surjectivity differs from naive recomputation");
  return r;
}

CheckResult bound_chain(const CutMap& mu, std::uint64_t seed) {
  CheckResult r{.suite = "bound-chain"};
  r.expect(is_increasing(mu), "map is not increasing");
  if (!r.passed()) return r;
  const std::size_t n = mu.source().size();
  std::vector<std::vector<std::size_t>> families;
  if (n <= kExhaustiveBoundChainCuts) {
    for (Mask sel = 1; sel < (Mask{1} << n); ++sel) families.push_back(bit_indices(sel));
  } else {
    for (std::size_t i = 0; i < n; ++i) families.push_back({i});
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < kSampledBoundChainFamilies; ++k) {
      std::vector<std::size_t> f(1 + rng() % std::min<std::size_t>(n, 6));
      for (auto& i : f) i = rng() % n;
      families.push_back(std::move(f));
    }
  }
  for (const auto& fam : families) {
    const BoundChainReport l = check_bound_chain(mu, fam);
    r.expect(l.holds(), "bound chain fails for a family of " + std::to_string(fam.size()) + " cuts");
  }
  return r;
}

CheckResult extension(const PosetMap& phi, const Limits& limits) {
  CheckResult r{.suite = "extension"};
  const ExtensionReport rep = check_extension(phi, limits);
  r.expect(rep.increasing_on_powerset == Verdict::Pass, "extension not increasing: " + rep.counterexample);
  if (phi.source_ordered() && is_increasing(phi)) {
    r.expect(rep.commutes_with_embedding == Verdict::Pass, "embedding square fails: " + rep.counterexample);
  }
  if (phi.source_ordered() && is_oie(phi)) {
    r.expect(rep.oie_on_cuts == Verdict::Pass, "extension not an OIE on cuts: " + rep.counterexample);
  }
  return r;
}

CheckResult simd_kernels(std::uint64_t seed, std::size_t rounds) {
  CheckResult r{.suite = "kernels"};
  std::mt19937_64 rng(seed);
  std::vector<kernels::Isa> variants;
  for (auto isa : {kernels::Isa::Avx2, kernels::Isa::Neon}) {
    if (kernels::supported(isa)) variants.push_back(isa);
  }
  for (std::size_t round = 0; round < rounds; ++round) {
    const std::size_t n = 1 + rng() % 64;
    const Mask full = full_mask(n);
    std::vector<Mask> rows(n);
    for (auto& m : rows) m = rng() & full;
    std::vector<Mask> in(rng() % 41);
    for (auto& m : in) m = rng() & full & (round % 3 == 0 ? rng() : ~Mask{0});
    std::vector<std::uint8_t> pick(in.size());
    for (auto& b : pick) b = static_cast<std::uint8_t>(rng() % 3 == 0 ? 0 : 1 + rng() % 255);
    const Mask f = rng() & full;

    std::vector<Mask> ref(in.size());
    std::vector<std::uint8_t> ref_cls(in.size());
    kernels::scalar::meet_rows(rows, in, ref, full);
    kernels::scalar::classify(in, f, ref_cls);
    const Mask ref_join = kernels::scalar::join_selected(in, pick);
    const Mask ref_meet = kernels::scalar::meet_selected(in, pick, full);

    for (auto isa : variants) {
      const kernels::Isa saved = kernels::active();
      kernels::set_active(isa);
      std::vector<Mask> got(in.size());
      std::vector<std::uint8_t> cls(in.size());
      kernels::meet_rows(rows, in, got, full);
      kernels::classify(in, f, cls);
      const std::string at =
          std::string(" (") + std::string(kernels::name(isa)) + ", round " + std::to_string(round) + ")";
      r.expect(got == ref, "meet_rows differs from scalar" + at);
      r.expect(cls == ref_cls, "classify differs from scalar" + at);
      r.expect(kernels::join_selected(in, pick) == ref_join, "join_selected differs from scalar" + at);
      r.expect(kernels::meet_selected(in, pick, full) == ref_meet, "meet_selected differs from scalar" + at);
      kernels::set_active(saved);
    }
  }
  return r;
}

std::vector<Poset> standard_corpus(const Limits& limits) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= 10; ++n) out.push_back(gen::chain(n, limits));
  for (std::size_t n = 1; n <= 10; ++n) out.push_back(gen::antichain(n, limits));
  for (std::size_t k = 0; k <= 4; ++k) out.push_back(gen::boolean_lattice(k, limits));
  for (std::uint64_t m = 1; m <= 60; ++m) out.push_back(gen::divisor_lattice(m, limits));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const double density = 0.1 + 0.1 * static_cast<double>(seed % 8);
    out.push_back(gen::random_poset(n, density, seed, limits));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cut-calculus", "macneille", "local-solvability", "global-solvability",
                                              "bound-chain",  "extension", "kernels",           "all"};
  return names;
}

}  // namespace ordcomp::checks

#include "ordcomp/completion.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "ordcomp/error.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

namespace {

std::string show(const Poset& p, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) s += ",";
    s += p.label(i);
    first = false;
  });
  return s + "}";
}

void require_member(const CompletedPoset& c, const Cut& cut) {
  if (cut.parent() != c.parent().id()) throw Error(Errc::ParentMismatch, "cut belongs to a different poset");
}

}  // namespace

Cut cut_closure(const Poset& p, const Subset& a) {
  require_parent(a, p.id());
  return Cut(p.subset(p.closure_of(a.mask())));
}

bool is_cut(const Poset& p, const Subset& a) {
  require_parent(a, p.id());
  return p.closure_of(a.mask()) == a.mask();
}

Cut make_cut(const Poset& p, const Subset& a) {
  if (!is_cut(p, a)) throw Error(Errc::InvalidCut, show(p, a.mask()) + " is not a cut");
  return Cut(a);
}

Cut embed(const Poset& p, std::size_t x) { return make_cut(p, down_set(p, x)); }

Cut embed(const Poset& p, std::string_view x) { return embed(p, p.index_of(x)); }

CompletedPoset::CompletedPoset(Poset parent, std::vector<Mask> cuts)
    : parent_(std::move(parent)), cuts_(std::move(cuts)) {
  std::sort(cuts_.begin(), cuts_.end(), canonical_less);
  cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
  index_.reserve(cuts_.size());
  for (std::size_t i = 0; i < cuts_.size(); ++i) index_.emplace(cuts_[i], i);
  embedding_.resize(parent_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    auto it = index_.find(parent_.down(x));
    if (it == index_.end()) throw Error(Errc::InvalidInput, "cut list lacks the principal cut of " + parent_.label(x));
    embedding_[x] = it->second;
  }
  if (cuts_.empty() || cuts_.back() != parent_.full_mask()) {
    throw Error(Errc::InvalidInput, "cut list lacks the full carrier");
  }
}

std::optional<std::size_t> CompletedPoset::find(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CompletedPoset::index_of(const Cut& c) const {
  require_member(*this, c);
  if (auto i = find(c.mask())) return *i;
  throw Error(Errc::InvalidCut, "cut missing from completion");
}

std::vector<std::pair<std::size_t, std::size_t>> CompletedPoset::hasse_edges() const {
  // Each cut strictly above A contains (A + x)^ul for some x outside A, so
  // the covers of A are the minimal ones among those closures.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const Mask a = cuts_[i];
    std::vector<Mask> next;
    for_each_bit(parent_.full_mask() & ~a, [&](std::size_t x) { next.push_back(parent_.closure_of(a | bit(x))); });
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::size_t> covers;
    for (Mask m : next) {
      const bool minimal = std::none_of(next.begin(), next.end(), [&](Mask o) { return o != m && is_subset(o, m); });
      if (minimal) covers.push_back(index_.at(m));
    }
    std::sort(covers.begin(), covers.end());
    for (auto j : covers) edges.emplace_back(i, j);
  }
  return edges;
}

CompletedPoset macneille_completion(const Poset& p, const Limits& limits) {
  limits.validate();
  if (p.size() > limits.max_arity) {
    throw Error(Errc::ResourceCap,
                "arity " + std::to_string(p.size()) + " exceeds cap " + std::to_string(limits.max_arity));
  }
  // Every cut is the intersection of the principal down-sets of its upper
  // bounds; close {X} under intersection with each <b].
  std::unordered_set<Mask> seen{p.full_mask()};
  std::vector<Mask> cuts{p.full_mask()};
  for (std::size_t b = 0; b < p.size(); ++b) {
    const Mask gen = p.down(b);
    const std::size_t existing = cuts.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const Mask m = cuts[i] & gen;
      if (seen.insert(m).second) {
        cuts.push_back(m);
        if (cuts.size() > limits.max_cuts) {
          throw Error(Errc::ResourceCap, "completion has more than " + std::to_string(limits.max_cuts) + " cuts");
        }
      }
    }
  }
  return CompletedPoset(p, std::move(cuts));
}

Cut sup_cuts(const CompletedPoset& c, std::span<const Cut> family) {
  Mask u = 0;
  for (const auto& a : family) {
    require_member(c, a);
    u |= a.mask();
  }
  return cut_closure(c.parent(), c.parent().subset(u));
}

Cut inf_cuts(const CompletedPoset& c, std::span<const Cut> family) {
  Mask m = c.parent().full_mask();
  for (const auto& a : family) {
    require_member(c, a);
    m &= a.mask();
  }
  return make_cut(c.parent(), c.parent().subset(m));
}

std::size_t sup_index(const CompletedPoset& c, std::span<const std::size_t> family) {
  Mask u = 0;
  for (auto i : family) u |= c.mask(i);
  return c.find(c.parent().closure_of(u)).value();
}

std::size_t inf_index(const CompletedPoset& c, std::span<const std::size_t> family) {
  Mask m = c.parent().full_mask();
  for (auto i : family) m &= c.mask(i);
  auto idx = c.find(m);
  if (!idx) throw Error(Errc::InvalidCut, "intersection of cuts is not a cut");
  return *idx;
}

namespace {

constexpr std::size_t kExhaustiveFamilyCuts = 16;
constexpr std::size_t kPairwiseCuts = 256;
constexpr std::size_t kSampledFamilies = 512;
constexpr std::size_t kExhaustiveArity = 16;
constexpr std::size_t kSampledSubsets = 1024;
constexpr std::uint64_t kVerifySeed = 0x5eed'0f'c075ULL;

class Verifier {
 public:
  Verifier(const CompletedPoset& c, MacNeilleReport& r) : c_(c), p_(c.parent()), r_(r) {}

  void completeness() {
    const std::size_t n = c_.size();
    std::vector<std::size_t> fam;
    if (n <= kExhaustiveFamilyCuts) {
      r_.completeness_exhaustive = true;
      for (Mask sel = 0; sel < (Mask{1} << n); ++sel) {
        fam = bit_indices(sel);
        check_family(fam);
      }
      return;
    }
    check_family({});
    fam.resize(n);
    for (std::size_t i = 0; i < n; ++i) fam[i] = i;
    check_family(fam);
    for (std::size_t i = 0; i < n; ++i) check_family({i});
    if (n <= kPairwiseCuts) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) check_family({i, j});
      }
    }
    std::mt19937_64 rng(kVerifySeed);
    for (std::size_t s = 0; s < kSampledFamilies; ++s) {
      fam.clear();
      const std::size_t len = 1 + rng() % std::min<std::size_t>(n, 8);
      for (std::size_t t = 0; t < len; ++t) fam.push_back(rng() % n);
      check_family(fam);
    }
  }

  void embedding() {
    const std::size_t n = p_.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ea = c_.embedding(a), eb = c_.embedding(b);
        if ((ea == eb) != (a == b) || p_.leq(a, b) != c_.leq(ea, eb)) {
          fail(r_.embedding_oie, "embedding is not an OIE at " + p_.label(a) + ", " + p_.label(b));
          return;
        }
      }
    }
  }

  void preservation() {
    const std::size_t n = p_.size();
    if (n <= kExhaustiveArity) {
      r_.preservation_exhaustive = true;
      for (Mask s = 0; s < (Mask{1} << n); ++s) check_bounds(s);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      check_bounds(bit(i));
      for (std::size_t j = i + 1; j < n; ++j) check_bounds(bit(i) | bit(j));
    }
    std::mt19937_64 rng(kVerifySeed + 1);
    for (std::size_t s = 0; s < kSampledSubsets; ++s) check_bounds(rng() & p_.full_mask());
  }

  void density() {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Mask a = c_.mask(k);
      Mask below = 0;
      Mask above = p_.full_mask();
      bool above_empty = true;
      for (std::size_t x = 0; x < p_.size(); ++x) {
        const Mask px = p_.down(x);
        if (is_subset(px, a)) below |= px;
        if (is_subset(a, px)) {
          above &= px;
          above_empty = false;
        }
      }
      if (p_.closure_of(below) != a) {
        fail(r_.density, "sup-side density fails for " + show(p_, a));
      }
      if (above_empty) {
        ++r_.density_inf_empty_family;
        if (a != p_.full_mask()) fail(r_.density, "inf-side density family empty for proper cut " + show(p_, a));
      } else if (above != a) {
        fail(r_.density, "inf-side density fails for " + show(p_, a));
      }
    }
  }

 private:
  void fail(bool& flag, const std::string& why) {
    flag = false;
    if (r_.counterexample.empty()) r_.counterexample = why;
  }

  void check_family(const std::vector<std::size_t>& fam) {
    ++r_.families_checked;
    const std::size_t s = sup_index(c_, fam);
    const std::size_t i = inf_index(c_, fam);
    Mask uni = 0, meet = p_.full_mask();
    for (auto f : fam) {
      uni |= c_.mask(f);
      meet &= c_.mask(f);
    }
    if (!is_subset(uni, c_.mask(s)) || !is_subset(c_.mask(i), meet)) {
      fail(r_.complete, "bound is not a bound of a family of " + std::to_string(fam.size()) + " cuts");
      return;
    }
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Mask m = c_.mask(k);
      if (is_subset(uni, m) && !is_subset(c_.mask(s), m)) {
        fail(r_.complete, "sup is not least: " + show(p_, c_.mask(s)) + " vs " + show(p_, m));
        return;
      }
      if (is_subset(m, meet) && !is_subset(m, c_.mask(i))) {
        fail(r_.complete, "inf is not greatest: " + show(p_, c_.mask(i)) + " vs " + show(p_, m));
        return;
      }
    }
  }

  void check_bounds(Mask s) {
    std::vector<std::size_t> fam;
    for_each_bit(s, [&](std::size_t x) { fam.push_back(c_.embedding(x)); });
    if (auto sup = least_in(p_, p_.upper_of(s))) {
      ++r_.existing_bounds_checked;
      if (sup_index(c_, fam) != c_.embedding(*sup))
        fail(r_.preserves_bounds, "supremum of " + show(p_, s) + " not preserved");
    }
    if (auto inf = greatest_in(p_, p_.lower_of(s))) {
      ++r_.existing_bounds_checked;
      if (inf_index(c_, fam) != c_.embedding(*inf))
        fail(r_.preserves_bounds, "infimum of " + show(p_, s) + " not preserved");
    }
  }

  const CompletedPoset& c_;
  const Poset& p_;
  MacNeilleReport& r_;
};

}  // namespace

MacNeilleReport verify_macneille(const CompletedPoset& c) {
  MacNeilleReport r;
  // Every listed subset must be a cut; checked in one batch.
  std::vector<Mask> closed(c.size());
  kernels::closure(c.parent().up_table(), c.parent().down_table(), c.cut_masks(), closed, c.parent().full_mask());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (closed[k] != c.mask(k)) {
      r.complete = false;
      r.counterexample = "listed subset " + show(c.parent(), c.mask(k)) + " is not a cut";
      return r;
    }
  }
  Verifier v(c, r);
  v.completeness();
  v.embedding();
  v.preservation();
  v.density();
  return r;
}

}  // namespace ordcomp

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcomp/limits.hpp"
#include "ordcomp/poset.hpp"

namespace ordcomp {

/// A subset A of a poset with A^ul = A. Only obtainable through the
/// functions below, which establish the cut condition.
class Cut {
 public:
  const Subset& members() const noexcept { return members_; }
  Mask mask() const noexcept { return members_.mask(); }
  CarrierId parent() const noexcept { return members_.parent(); }

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  explicit Cut(Subset members) : members_(members) {}

  friend Cut cut_closure(const Poset&, const Subset&);
  friend Cut make_cut(const Poset&, const Subset&);
  friend class CompletedPoset;

  Subset members_;
};

/// A^ul, the least cut containing A.
Cut cut_closure(const Poset& p, const Subset& a);
bool is_cut(const Poset& p, const Subset& a);
/// Wraps `a` as a cut; throws Error(InvalidCut) if it is not one.
Cut make_cut(const Poset& p, const Subset& a);
/// <x] as a cut.
Cut embed(const Poset& p, std::size_t x);
Cut embed(const Poset& p, std::string_view x);

/// All cuts of a poset in canonical order (cardinality, then lexicographic
/// on member indices), ordered by inclusion.
class CompletedPoset {
 public:
  CompletedPoset(Poset parent, std::vector<Mask> cuts);

  const Poset& parent() const noexcept { return parent_; }
  std::size_t size() const noexcept { return cuts_.size(); }
  std::span<const Mask> cut_masks() const noexcept { return cuts_; }
  Mask mask(std::size_t i) const { return cuts_.at(i); }
  Cut cut(std::size_t i) const { return Cut(parent_.subset(cuts_.at(i))); }

  std::optional<std::size_t> find(Mask m) const;
  /// Throws Error(ParentMismatch) for a foreign cut.
  std::size_t index_of(const Cut& c) const;

  /// Index of <x].
  std::size_t embedding(std::size_t x) const { return embedding_.at(x); }
  std::span<const std::size_t> embedding() const noexcept { return embedding_; }

  bool leq(std::size_t i, std::size_t j) const { return is_subset(cuts_.at(i), cuts_.at(j)); }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return cuts_.size() - 1; }
  bool empty_is_cut() const noexcept { return cuts_.front() == 0; }

  /// Cover pairs of the inclusion order, as (smaller, larger) indices.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  Poset parent_;
  std::vector<Mask> cuts_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<std::size_t> embedding_;
};

/// Cuts are generated as all intersections of principal down-sets, plus the
/// full carrier. Throws Error(ResourceCap) when the arity or the number of
/// cuts exceeds `limits`.
CompletedPoset macneille_completion(const Poset& p, const Limits& limits = {});

/// (union of the family)^ul; the empty family gives the least cut.
Cut sup_cuts(const CompletedPoset& c, std::span<const Cut> family);
/// Intersection of the family; the empty family gives the full carrier.
Cut inf_cuts(const CompletedPoset& c, std::span<const Cut> family);

/// Index-based variants over the cut list of `c`.
std::size_t sup_index(const CompletedPoset& c, std::span<const std::size_t> family);
std::size_t inf_index(const CompletedPoset& c, std::span<const std::size_t> family);

struct MacNeilleReport {
  bool complete = true;
  bool completeness_exhaustive = false;
  std::size_t families_checked = 0;
  bool embedding_oie = true;
  bool preserves_bounds = true;
  bool preservation_exhaustive = false;
  std::size_t existing_bounds_checked = 0;
  bool density = true;
  /// Cuts whose inf-side density family {<x] : A ⊆ <x]} is empty. Only the
  /// full carrier of a poset without maximum can land here.
  std::size_t density_inf_empty_family = 0;
  std::string counterexample;

  bool all_passed() const noexcept { return complete && embedding_oie && preserves_bounds && density; }
};

MacNeilleReport verify_macneille(const CompletedPoset& c);

}  // namespace ordcomp

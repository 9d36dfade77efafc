#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordcomp/bits.hpp"
#include "ordcomp/limits.hpp"

namespace ordcomp {

/// Identity shared by every copy of a carrier; subsets remember it so that
/// operations mixing subsets of unrelated carriers can be rejected.
using CarrierId = std::uint64_t;

/// Subset of a specific carrier, as a bitmask.
class Subset {
 public:
  Subset(CarrierId parent, std::size_t arity, Mask members);

  CarrierId parent() const noexcept { return parent_; }
  std::size_t arity() const noexcept { return arity_; }
  Mask mask() const noexcept { return members_; }

  bool contains(std::size_t i) const noexcept { return ordcomp::contains(members_, i); }
  std::size_t size() const noexcept { return cardinality(members_); }
  bool empty() const noexcept { return members_ == 0; }
  std::vector<std::size_t> indices() const { return bit_indices(members_); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  CarrierId parent_;
  std::size_t arity_;
  Mask members_;
};

/// Throws Error(ParentMismatch) unless `s` was taken from carrier `id`.
void require_parent(const Subset& s, CarrierId id);

/// Finite set of distinct labels with no order on it.
class CarrierSet {
 public:
  explicit CarrierSet(std::vector<std::string> labels);

  CarrierId id() const noexcept { return id_; }
  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const { return labels_->at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error(UnknownElement).
  std::size_t index_of(std::string_view name) const;

  Mask full_mask() const noexcept { return ordcomp::full_mask(size()); }
  Subset subset(Mask m) const { return Subset(id_, size(), m); }
  Subset subset(std::span<const std::string> names) const;

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  CarrierId id_;
};

enum class RelationKind { Covers, Full };

/// Finite partially ordered set, immutable after construction. Element i is
/// the i-th label; `down(i)` is <i] and `up(i)` is [i>.
class Poset {
 public:
  using IndexPair = std::pair<std::size_t, std::size_t>;
  using NamePair = std::pair<std::string, std::string>;

  /// kind == Covers: the reflexive-transitive closure of `pairs` is taken.
  /// kind == Full: `pairs` is the whole relation (the diagonal may be
  /// omitted) and must already be a partial order.
  static Poset build(std::vector<std::string> labels, const std::vector<NamePair>& pairs, RelationKind kind,
                     const Limits& limits = {});
  static Poset from_indices(std::vector<std::string> labels, const std::vector<IndexPair>& pairs, RelationKind kind,
                            const Limits& limits = {});

  CarrierId id() const noexcept { return carrier_.id(); }
  const CarrierSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& labels() const noexcept { return carrier_.labels(); }
  const std::string& label(std::size_t i) const { return carrier_.label(i); }
  std::size_t index_of(std::string_view name) const { return carrier_.index_of(name); }

  bool leq(std::size_t i, std::size_t j) const noexcept { return ordcomp::contains((*up_)[i], j); }
  Mask down(std::size_t i) const noexcept { return (*down_)[i]; }
  Mask up(std::size_t i) const noexcept { return (*up_)[i]; }
  std::span<const Mask> down_table() const noexcept { return *down_; }
  std::span<const Mask> up_table() const noexcept { return *up_; }

  Mask full_mask() const noexcept { return carrier_.full_mask(); }
  Subset subset(Mask m) const { return carrier_.subset(m); }
  Subset subset(std::span<const std::string> names) const { return carrier_.subset(names); }

  /// A^u and A^l on raw masks; the empty mask maps to the full carrier.
  Mask upper_of(Mask a) const noexcept;
  Mask lower_of(Mask a) const noexcept;
  /// A^ul.
  Mask closure_of(Mask a) const noexcept { return lower_of(upper_of(a)); }

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<IndexPair> covers() const;

 private:
  Poset(CarrierSet carrier, std::vector<Mask> down, std::vector<Mask> up);

  CarrierSet carrier_;
  std::shared_ptr<const std::vector<Mask>> down_;
  std::shared_ptr<const std::vector<Mask>> up_;
};

Subset down_set(const Poset& p, std::size_t a);
Subset down_set(const Poset& p, std::string_view a);
Subset up_set(const Poset& p, std::size_t a);
Subset up_set(const Poset& p, std::string_view a);

Subset upper_bounds(const Poset& p, const Subset& a);
Subset lower_bounds(const Poset& p, const Subset& a);

Subset minimals(const Poset& p);
Subset maximals(const Poset& p);
bool has_minimum(const Poset& p);
bool has_maximum(const Poset& p);

/// Least element of `among` w.r.t. the order of `p`, if there is one.
std::optional<std::size_t> least_in(const Poset& p, Mask among);
std::optional<std::size_t> greatest_in(const Poset& p, Mask among);

/// Finds an order isomorphism p -> q by backtracking; result[i] is the image
/// of element i. Intended for small posets.
std::optional<std::vector<std::size_t>> order_isomorphism(const Poset& p, const Poset& q);

}  // namespace ordcomp

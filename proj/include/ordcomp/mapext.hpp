#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ordcomp/completion.hpp"

namespace ordcomp {

/// Source of a map: either an unordered set or a poset.
using Domain = std::variant<CarrierSet, Poset>;

/// Total map from a source carrier into a target poset.
class PosetMap {
 public:
  /// assignment[x] is the target index of source element x.
  PosetMap(Domain source, Poset target, std::vector<std::size_t> assignment);
  /// Throws Error(InvalidInput) unless every source name is mapped exactly once.
  static PosetMap from_names(Domain source, Poset target, const std::map<std::string, std::string>& names);

  const Domain& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  std::span<const std::size_t> assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_.at(x); }

  const CarrierSet& source_carrier() const noexcept;
  bool source_ordered() const noexcept { return std::holds_alternative<Poset>(source_); }
  /// Throws Error(SourceNotOrdered) for a set-valued source.
  const Poset& source_poset() const;

  /// φ(A) as a target mask.
  Mask image(Mask a) const noexcept;

 private:
  Domain source_;
  Poset target_;
  std::vector<std::size_t> assignment_;
};

/// φ^# : P(X) -> Y^#, A ↦ (φ(A))^ul.
class ExtendedMap {
 public:
  explicit ExtendedMap(PosetMap base, const Limits& limits = {});

  const PosetMap& base() const noexcept { return base_; }
  const CompletedPoset& target_completion() const noexcept { return target_completion_; }

  Cut apply(const Subset& a) const;
  /// Index in the target completion of (φ(A))^ul.
  std::size_t apply_index(Mask a) const;
  /// Batched apply_index over many source masks.
  std::vector<std::size_t> apply_many(std::span<const Mask> sources) const;

 private:
  PosetMap base_;
  CompletedPoset target_completion_;
};

Cut apply_extension(const ExtendedMap& e, const Subset& a);

bool is_increasing(const PosetMap& phi);
/// Injective, and a <= b iff φ(a) <= φ(b).
bool is_oie(const PosetMap& phi);

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v) noexcept;

struct ExtensionReport {
  /// A ⊆ B implies φ^#(A) ⊆ φ^#(B) on the source power set.
  Verdict increasing_on_powerset = Verdict::NotApplicable;
  bool powerset_exhaustive = false;
  /// φ^#(<x]) = <φ(x)] for every x; needs φ increasing.
  Verdict commutes_with_embedding = Verdict::NotApplicable;
  /// φ^# restricted to source cuts is an OIE; needs φ an OIE.
  Verdict oie_on_cuts = Verdict::NotApplicable;
  std::string counterexample;

  bool ok() const noexcept {
    return increasing_on_powerset != Verdict::Fail && commutes_with_embedding != Verdict::Fail &&
           oie_on_cuts != Verdict::Fail;
  }
};

ExtensionReport check_extension(const PosetMap& phi, const Limits& limits = {});

/// Map between the cut lattices of two completions, by cut index.
class CutMap {
 public:
  CutMap(CompletedPoset source, CompletedPoset target, std::vector<std::size_t> image);

  const CompletedPoset& source() const noexcept { return source_; }
  const CompletedPoset& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  std::span<const std::size_t> image() const noexcept { return image_; }

 private:
  CompletedPoset source_;
  CompletedPoset target_;
  std::vector<std::size_t> image_;
};

/// φ^# restricted to the cuts of the source completion. Needs an ordered source.
CutMap extension_on_cuts(const ExtendedMap& e, const Limits& limits = {});

bool is_increasing(const CutMap& mu);

struct BoundChainReport {
  std::size_t inf_image = 0;      // μ(inf E)
  std::size_t inf_of_images = 0;  // inf μ(E)
  std::size_t sup_of_images = 0;  // sup μ(E)
  std::size_t sup_image = 0;      // μ(sup E)
  bool first = false;             // μ(inf E) <= inf μ(E)
  bool middle = false;            // inf μ(E) <= sup μ(E)
  bool last = false;              // sup μ(E) <= μ(sup E)

  bool holds() const noexcept { return first && middle && last; }
  bool first_strict() const noexcept { return inf_image != inf_of_images; }
  bool last_strict() const noexcept { return sup_of_images != sup_image; }
};

/// Throws Error(NotIncreasing) or Error(EmptyFamily).
BoundChainReport check_bound_chain(const CutMap& mu, std::span<const std::size_t> family);

}  // namespace ordcomp

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordcomp/completion.hpp"
#include "ordcomp/mapext.hpp"

namespace ordcomp {

/// X_T: the fibres of T ordered by comparing their images in Y.
class QuotientPoset {
 public:
  QuotientPoset(std::vector<Mask> classes, std::vector<std::size_t> representatives, Poset order);

  std::span<const Mask> classes() const noexcept { return classes_; }
  std::span<const std::size_t> representatives() const noexcept { return representatives_; }
  const Poset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t x) const;

 private:
  std::vector<Mask> classes_;
  std::vector<std::size_t> representatives_;
  Poset order_;
};

/// An equation T(A) = F with T : X -> Y, together with the quotient X_T,
/// the injective class map T_≈ : X_T -> Y, and both completions.
class EquationInstance {
 public:
  static EquationInstance build(CarrierSet domain, Poset codomain, std::vector<std::size_t> map,
                                const Limits& limits = {});
  static EquationInstance build(const PosetMap& t, const Limits& limits = {});

  const CarrierSet& domain() const noexcept { return domain_; }
  const Poset& codomain() const noexcept { return class_map_.base().target(); }
  const PosetMap& map() const noexcept { return map_; }
  const QuotientPoset& quotient() const noexcept { return quotient_; }
  /// T_≈ and its extension to completions.
  const ExtendedMap& class_map() const noexcept { return class_map_; }
  const CompletedPoset& codomain_completion() const noexcept { return class_map_.target_completion(); }
  const CompletedPoset& quotient_completion() const noexcept { return quotient_completion_; }
  /// T^# of every cut of X_T^#, as indices into Y^#.
  std::span<const std::size_t> image_table() const noexcept { return images_; }
  std::span<const Mask> image_masks() const noexcept { return image_masks_; }

 private:
  EquationInstance(CarrierSet domain, PosetMap map, QuotientPoset quotient, ExtendedMap class_map,
                   CompletedPoset quotient_completion);

  CarrierSet domain_;
  PosetMap map_;
  QuotientPoset quotient_;
  ExtendedMap class_map_;
  CompletedPoset quotient_completion_;
  std::vector<std::size_t> images_;
  std::vector<Mask> image_masks_;
};

/// T^#(A) = (T_≈(A))^ul for a cut A of the quotient completion.
Cut t_sharp(const EquationInstance& e, const Cut& a);

struct AssumptionFlags {
  bool quotient_has_minimum = false;
  bool quotient_has_maximum = false;
  bool codomain_has_minimum = false;
  bool codomain_has_maximum = false;
  bool empty_cut_in_quotient_completion = false;
  bool empty_cut_in_codomain_completion = false;

  /// True when either poset has a minimum or maximum, i.e. the standing
  /// "no least / no greatest element" premise of the method does not hold.
  bool deviates() const noexcept {
    return quotient_has_minimum || quotient_has_maximum || codomain_has_minimum || codomain_has_maximum;
  }
};

struct SolveReport {
  Cut target;
  /// Cuts U of X_T^# with T^#(U) ⊆ F, as quotient-completion indices.
  std::vector<std::size_t> lower_family;
  /// Cuts V of X_T^# with F ⊆ T^#(V).
  std::vector<std::size_t> upper_family;
  Cut sup_of_images;
  Cut inf_of_images;
  /// sup and inf of the two families taken in X_T^#.
  Cut sup_of_lower;
  Cut inf_of_upper;
  bool solvable = false;
  std::optional<Cut> solution;
  bool lower_family_empty = false;
  bool upper_family_empty = false;
  AssumptionFlags assumptions;
};

/// Decides T^#(A) = F and constructs the solution when it exists. `f` must
/// already be a cut of the codomain; otherwise Error(InvalidCut).
SolveReport solve(const EquationInstance& e, const Subset& f);

struct GlobalReport {
  std::size_t quotient_cuts = 0;
  std::size_t codomain_cuts = 0;
  std::size_t image_size = 0;
  /// Every <y] lies in the image of T^#.
  bool image_contains_principal = false;
  /// The image of T^# is all of Y^#.
  bool image_is_everything = false;
  bool conditions_agree = false;
  /// Set when image_is_everything; whether T^# is an order isomorphism.
  std::optional<bool> order_isomorphism;
  /// Codomain elements y whose <y] has no preimage.
  std::vector<std::size_t> missing_principal;
};

GlobalReport global_character(const EquationInstance& e);

AssumptionFlags assumption_flags(const EquationInstance& e);

}  // namespace ordcomp

#include "ordcomp/solver.hpp"

#include <algorithm>

#include "ordcomp/error.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

QuotientPoset::QuotientPoset(std::vector<Mask> classes, std::vector<std::size_t> representatives, Poset order)
    : classes_(std::move(classes)), representatives_(std::move(representatives)), order_(std::move(order)) {}

std::size_t QuotientPoset::class_of(std::size_t x) const {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (contains(classes_[c], x)) return c;
  }
  throw Error(Errc::UnknownElement, "element lies in no class");
}

EquationInstance::EquationInstance(CarrierSet domain, PosetMap map, QuotientPoset quotient, ExtendedMap class_map,
                                   CompletedPoset quotient_completion)
    : domain_(std::move(domain)),
      map_(std::move(map)),
      quotient_(std::move(quotient)),
      class_map_(std::move(class_map)),
      quotient_completion_(std::move(quotient_completion)) {
  images_ = class_map_.apply_many(quotient_completion_.cut_masks());
  image_masks_.reserve(images_.size());
  for (auto i : images_) image_masks_.push_back(codomain_completion().mask(i));
}

EquationInstance EquationInstance::build(const PosetMap& t, const Limits& limits) {
  if (t.source_ordered()) {
    // The order on the domain plays no part; only the fibres of T matter.
    return build(t.source_poset().carrier(), t.target(), {t.assignment().begin(), t.assignment().end()}, limits);
  }
  return build(std::get<CarrierSet>(t.source()), t.target(), {t.assignment().begin(), t.assignment().end()}, limits);
}

EquationInstance EquationInstance::build(CarrierSet domain, Poset codomain, std::vector<std::size_t> map,
                                         const Limits& limits) {
  limits.validate();
  if (domain.size() == 0) throw Error(Errc::InvalidInput, "equation domain must be nonvoid");
  if (domain.size() > limits.max_arity) {
    throw Error(Errc::ResourceCap, "domain arity " + std::to_string(domain.size()) + " exceeds cap");
  }
  PosetMap t(domain, codomain, map);

  // Fibres, in order of first occurrence in the domain.
  std::vector<Mask> classes;
  std::vector<std::size_t> reps;
  std::vector<std::size_t> class_image;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    auto it = std::find(class_image.begin(), class_image.end(), map[x]);
    if (it == class_image.end()) {
      classes.push_back(bit(x));
      reps.push_back(x);
      class_image.push_back(map[x]);
    } else {
      classes[static_cast<std::size_t>(it - class_image.begin())] |= bit(x);
    }
  }

  // U <=_T V iff T_≈(U) <= T_≈(V).
  std::vector<std::string> labels;
  std::vector<Poset::IndexPair> rel;
  for (std::size_t u = 0; u < classes.size(); ++u) {
    labels.push_back(domain.label(reps[u]));
    for (std::size_t v = 0; v < classes.size(); ++v) {
      if (codomain.leq(class_image[u], class_image[v])) rel.emplace_back(u, v);
    }
  }
  Poset order = Poset::from_indices(std::move(labels), rel, RelationKind::Full, limits);
  CompletedPoset qc = macneille_completion(order, limits);
  ExtendedMap class_map(PosetMap(order, codomain, class_image), limits);
  QuotientPoset quotient(std::move(classes), std::move(reps), std::move(order));
  return EquationInstance(std::move(domain), std::move(t), std::move(quotient), std::move(class_map), std::move(qc));
}

Cut t_sharp(const EquationInstance& e, const Cut& a) {
  const std::size_t i = e.quotient_completion().index_of(a);
  return e.codomain_completion().cut(e.image_table()[i]);
}

AssumptionFlags assumption_flags(const EquationInstance& e) {
  AssumptionFlags f;
  f.quotient_has_minimum = has_minimum(e.quotient().order());
  f.quotient_has_maximum = has_maximum(e.quotient().order());
  f.codomain_has_minimum = has_minimum(e.codomain());
  f.codomain_has_maximum = has_maximum(e.codomain());
  f.empty_cut_in_quotient_completion = e.quotient_completion().empty_is_cut();
  f.empty_cut_in_codomain_completion = e.codomain_completion().empty_is_cut();
  return f;
}

SolveReport solve(const EquationInstance& e, const Subset& f) {
  const Poset& y = e.codomain();
  const Cut target = make_cut(y, f);
  const auto& xc = e.quotient_completion();
  const auto& yc = e.codomain_completion();
  const auto images = e.image_masks();

  std::vector<std::uint8_t> flags(images.size());
  kernels::classify(images, target.mask(), flags);
  std::vector<std::uint8_t> in_lower(images.size()), in_upper(images.size());
  std::vector<std::size_t> lower, upper;
  for (std::size_t k = 0; k < images.size(); ++k) {
    in_lower[k] = flags[k] & kernels::kSubsetOf;
    in_upper[k] = flags[k] & kernels::kSupersetOf;
    if (in_lower[k]) lower.push_back(k);
    if (in_upper[k]) upper.push_back(k);
  }

  // sup over Y^# of images of the lower family: closure of their union.
  const Mask sup_images = y.closure_of(kernels::join_selected(images, in_lower));
  // inf over Y^# of images of the upper family: their intersection.
  const Mask inf_images = kernels::meet_selected(images, in_upper, y.full_mask());

  const std::size_t sup_lower = sup_index(xc, lower);
  const std::size_t inf_upper = inf_index(xc, upper);

  SolveReport r{
      .target = target,
      .lower_family = lower,
      .upper_family = upper,
      .sup_of_images = yc.cut(yc.find(sup_images).value()),
      .inf_of_images = yc.cut(yc.find(inf_images).value()),
      .sup_of_lower = xc.cut(sup_lower),
      .inf_of_upper = xc.cut(inf_upper),
      .solvable = sup_images == inf_images,
      .solution = std::nullopt,
      .lower_family_empty = lower.empty(),
      .upper_family_empty = upper.empty(),
      .assumptions = assumption_flags(e),
  };

  if (r.solvable) {
    if (sup_lower != inf_upper || e.image_table()[sup_lower] != yc.index_of(target)) {
      throw std::logic_error("solution cross-check failed: T^# is not injective on this instance");
    }
    r.solution = xc.cut(sup_lower);
  }
  return r;
}

GlobalReport global_character(const EquationInstance& e) {
  const auto& yc = e.codomain_completion();
  const auto& xc = e.quotient_completion();
  GlobalReport g;
  g.quotient_cuts = xc.size();
  g.codomain_cuts = yc.size();

  std::vector<bool> hit(yc.size(), false);
  for (auto i : e.image_table()) hit[i] = true;
  g.image_size = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));

  for (std::size_t y = 0; y < e.codomain().size(); ++y) {
    if (!hit[yc.embedding(y)]) g.missing_principal.push_back(y);
  }
  g.image_contains_principal = g.missing_principal.empty();
  g.image_is_everything = g.image_size == yc.size();
  g.conditions_agree = g.image_contains_principal == g.image_is_everything;

  if (g.image_is_everything) {
    bool iso = xc.size() == yc.size();
    const auto img = e.image_table();
    for (std::size_t a = 0; a < xc.size() && iso; ++a) {
      for (std::size_t b = 0; b < xc.size() && iso; ++b) {
        iso = (a == b) == (img[a] == img[b]) && xc.leq(a, b) == yc.leq(img[a], img[b]);
      }
    }
    g.order_isomorphism = iso;
  }
  return g;
}

}  // namespace ordcomp

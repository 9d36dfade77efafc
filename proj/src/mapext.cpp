#include "ordcomp/mapext.hpp"

#include "ordcomp/error.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

namespace {

constexpr std::size_t kExhaustivePowersetArity = 16;

}  // namespace

PosetMap::PosetMap(Domain source, Poset target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_carrier().size()) {
    throw Error(Errc::InvalidInput, "map must assign exactly one image to every source element");
  }
  for (auto y : assignment_) {
    if (y >= target_.size()) throw Error(Errc::UnknownElement, "map image index out of range");
  }
}

PosetMap PosetMap::from_names(Domain source, Poset target, const std::map<std::string, std::string>& names) {
  const CarrierSet& src = std::visit(
      [](const auto& d) -> const CarrierSet& {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Poset>) {
          return d.carrier();
        } else {
          return d;
        }
      },
      source);
  std::vector<std::size_t> assignment(src.size());
  std::vector<bool> seen(src.size(), false);
  for (const auto& [from, to] : names) {
    const std::size_t x = src.index_of(from);
    assignment[x] = target.index_of(to);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < src.size(); ++x) {
    if (!seen[x]) throw Error(Errc::InvalidInput, "map has no image for '" + src.label(x) + "'");
  }
  return PosetMap(std::move(source), std::move(target), std::move(assignment));
}

const CarrierSet& PosetMap::source_carrier() const noexcept {
  if (const auto* p = std::get_if<Poset>(&source_)) return p->carrier();
  return std::get<CarrierSet>(source_);
}

const Poset& PosetMap::source_poset() const {
  if (const auto* p = std::get_if<Poset>(&source_)) return *p;
  throw Error(Errc::SourceNotOrdered, "map source is an unordered set");
}

Mask PosetMap::image(Mask a) const noexcept {
  Mask out = 0;
  for_each_bit(a, [&](std::size_t x) { out |= bit(assignment_[x]); });
  return out;
}

ExtendedMap::ExtendedMap(PosetMap base, const Limits& limits)
    : base_(std::move(base)), target_completion_(macneille_completion(base_.target(), limits)) {}

Cut ExtendedMap::apply(const Subset& a) const {
  require_parent(a, base_.source_carrier().id());
  return target_completion_.cut(apply_index(a.mask()));
}

std::size_t ExtendedMap::apply_index(Mask a) const {
  const Poset& y = base_.target();
  return target_completion_.find(y.closure_of(base_.image(a))).value();
}

std::vector<std::size_t> ExtendedMap::apply_many(std::span<const Mask> sources) const {
  const Poset& y = base_.target();
  std::vector<Mask> images(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) images[k] = base_.image(sources[k]);
  kernels::closure(y.up_table(), y.down_table(), images, images, y.full_mask());
  std::vector<std::size_t> out(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) out[k] = target_completion_.find(images[k]).value();
  return out;
}

Cut apply_extension(const ExtendedMap& e, const Subset& a) { return e.apply(a); }

bool is_increasing(const PosetMap& phi) {
  const Poset& x = phi.source_poset();
  const Poset& y = phi.target();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.leq(a, b) && !y.leq(phi(a), phi(b))) return false;
    }
  }
  return true;
}

bool is_oie(const PosetMap& phi) {
  const Poset& x = phi.source_poset();
  const Poset& y = phi.target();
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (a != b && phi(a) == phi(b)) return false;
      if (x.leq(a, b) != y.leq(phi(a), phi(b))) return false;
    }
  }
  return true;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

ExtensionReport check_extension(const PosetMap& phi, const Limits& limits) {
  ExtensionReport r;
  const ExtendedMap ext(phi, limits);
  const std::size_t n = phi.source_carrier().size();

  // Monotone along every covering pair A ⊂ A + x of the power set, which
  // implies monotonicity on all comparable pairs.
  r.increasing_on_powerset = Verdict::Pass;
  if (n <= kExhaustivePowersetArity) {
    r.powerset_exhaustive = true;
    std::vector<Mask> all(std::size_t{1} << n);
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
    const auto img = ext.apply_many(all);
    const auto& yc = ext.target_completion();
    for (std::size_t s = 0; s < all.size() && r.increasing_on_powerset == Verdict::Pass; ++s) {
      for (std::size_t x = 0; x < n; ++x) {
        if (contains(s, x)) continue;
        if (!yc.leq(img[s], img[s | bit(x)])) {
          r.increasing_on_powerset = Verdict::Fail;
          r.counterexample = "extension decreases when adding source element " + std::to_string(x);
          break;
        }
      }
    }
  } else {
    const auto& yc = ext.target_completion();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!yc.leq(ext.apply_index(bit(x)), ext.apply_index(bit(x) | bit(z)))) {
          r.increasing_on_powerset = Verdict::Fail;
          r.counterexample = "extension decreases on a pair";
        }
      }
    }
  }

  if (!phi.source_ordered()) return r;
  const Poset& x = phi.source_poset();
  const Poset& y = phi.target();

  if (is_increasing(phi)) {
    r.commutes_with_embedding = Verdict::Pass;
    for (std::size_t e = 0; e < x.size(); ++e) {
      if (ext.apply_index(x.down(e)) != ext.target_completion().embedding(phi(e))) {
        r.commutes_with_embedding = Verdict::Fail;
        if (r.counterexample.empty()) {
          r.counterexample = "extension of <" + x.label(e) + "] differs from <" + y.label(phi(e)) + "]";
        }
        break;
      }
    }
  }

  if (is_oie(phi)) {
    r.oie_on_cuts = Verdict::Pass;
    const CutMap mu = extension_on_cuts(ext, limits);
    const auto& src = mu.source();
    for (std::size_t a = 0; a < src.size() && r.oie_on_cuts == Verdict::Pass; ++a) {
      for (std::size_t b = 0; b < src.size(); ++b) {
        const bool injective_ok = a == b || mu(a) != mu(b);
        if (!injective_ok || src.leq(a, b) != mu.target().leq(mu(a), mu(b))) {
          r.oie_on_cuts = Verdict::Fail;
          if (r.counterexample.empty()) r.counterexample = "extension is not an OIE on source cuts";
          break;
        }
      }
    }
  }
  return r;
}

CutMap::CutMap(CompletedPoset source, CompletedPoset target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) throw Error(Errc::InvalidInput, "cut map must cover every source cut");
  for (auto i : image_) {
    if (i >= target_.size()) throw Error(Errc::InvalidInput, "cut map image out of range");
  }
}

CutMap extension_on_cuts(const ExtendedMap& e, const Limits& limits) {
  CompletedPoset src = macneille_completion(e.base().source_poset(), limits);
  auto image = e.apply_many(src.cut_masks());
  return CutMap(std::move(src), e.target_completion(), std::move(image));
}

bool is_increasing(const CutMap& mu) {
  const auto& s = mu.source();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) && !mu.target().leq(mu(a), mu(b))) return false;
    }
  }
  return true;
}

BoundChainReport check_bound_chain(const CutMap& mu, std::span<const std::size_t> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "bound chain needs a nonvoid family");
  if (!is_increasing(mu)) throw Error(Errc::NotIncreasing, "cut map is not increasing");
  const auto& m = mu.source();
  const auto& n = mu.target();
  std::vector<std::size_t> images;
  images.reserve(family.size());
  for (auto i : family) images.push_back(mu(i));

  BoundChainReport r;
  r.inf_image = mu(inf_index(m, family));
  r.sup_image = mu(sup_index(m, family));
  r.inf_of_images = inf_index(n, images);
  r.sup_of_images = sup_index(n, images);
  r.first = n.leq(r.inf_image, r.inf_of_images);
  r.middle = n.leq(r.inf_of_images, r.sup_of_images);
  r.last = n.leq(r.sup_of_images, r.sup_image);
  return r;
}

}  // namespace ordcomp

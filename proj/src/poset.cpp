#include "ordcomp/poset.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <unordered_set>

#include "ordcomp/error.hpp"

namespace ordcomp {

namespace {

CarrierId next_carrier_id() {
  static std::atomic<CarrierId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::string describe_cap(std::size_t n, std::size_t cap) {
  return "arity " + std::to_string(n) + " exceeds cap " + std::to_string(cap);
}

}  // namespace

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CycleDetected:
      return "CycleDetected";
    case Errc::NotAPartialOrder:
      return "NotAPartialOrder";
    case Errc::DuplicateLabel:
      return "DuplicateLabel";
    case Errc::UnknownElement:
      return "UnknownElement";
    case Errc::ParentMismatch:
      return "ParentMismatch";
    case Errc::ResourceCap:
      return "ResourceCap";
    case Errc::InvalidCut:
      return "InvalidCut";
    case Errc::SourceNotOrdered:
      return "SourceNotOrdered";
    case Errc::NotIncreasing:
      return "NotIncreasing";
    case Errc::EmptyFamily:
      return "EmptyFamily";
    case Errc::BadSpec:
      return "BadSpec";
    case Errc::NoBound:
      return "NoBound";
    case Errc::MultipleSolutions:
      return "MultipleSolutions";
    case Errc::UnknownSuite:
      return "UnknownSuite";
    case Errc::InvalidInput:
      return "InvalidInput";
  }
  return "Unknown";
}

void Limits::validate() const {
  if (max_arity == 0 || max_cuts == 0) throw Error(Errc::BadSpec, "caps must be positive");
  if (max_arity > kMaxArity) {
    throw Error(Errc::BadSpec, "max arity cannot exceed " + std::to_string(kMaxArity));
  }
}

Subset::Subset(CarrierId parent, std::size_t arity, Mask members) : parent_(parent), arity_(arity), members_(members) {
  if (arity > kMaxArity || !is_subset(members, full_mask(arity))) {
    throw Error(Errc::UnknownElement, "subset member index out of range");
  }
}

void require_parent(const Subset& s, CarrierId id) {
  if (s.parent() != id) throw Error(Errc::ParentMismatch, "subset belongs to a different carrier");
}

CarrierSet::CarrierSet(std::vector<std::string> labels) : id_(next_carrier_id()) {
  if (labels.size() > kMaxArity) throw Error(Errc::ResourceCap, describe_cap(labels.size(), kMaxArity));
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(Errc::DuplicateLabel, "label '" + l + "' repeated");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> CarrierSet::find(std::string_view name) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CarrierSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(Errc::UnknownElement, "no element named '" + std::string(name) + "'");
}

Subset CarrierSet::subset(std::span<const std::string> names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(index_of(n));
  return subset(m);
}

Poset::Poset(CarrierSet carrier, std::vector<Mask> down, std::vector<Mask> up)
    : carrier_(std::move(carrier)),
      down_(std::make_shared<const std::vector<Mask>>(std::move(down))),
      up_(std::make_shared<const std::vector<Mask>>(std::move(up))) {}

Poset Poset::build(std::vector<std::string> labels, const std::vector<NamePair>& pairs, RelationKind kind,
                   const Limits& limits) {
  limits.validate();
  if (labels.size() > limits.max_arity) {
    throw Error(Errc::ResourceCap, describe_cap(labels.size(), limits.max_arity));
  }
  CarrierSet carrier(labels);
  std::vector<IndexPair> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(carrier.index_of(a), carrier.index_of(b));
  return from_indices(std::move(labels), idx, kind, limits);
}

Poset Poset::from_indices(std::vector<std::string> labels, const std::vector<IndexPair>& pairs, RelationKind kind,
                          const Limits& limits) {
  limits.validate();
  const std::size_t n = labels.size();
  if (n > limits.max_arity) throw Error(Errc::ResourceCap, describe_cap(n, limits.max_arity));
  CarrierSet carrier(std::move(labels));

  // up[i] = {j : i <= j}
  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(Errc::UnknownElement, "relation index out of range");
    up[a] |= bit(b);
  }

  if (kind == RelationKind::Covers) {
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (contains(up[i], k)) up[i] |= up[k];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for_each_bit(up[i], [&](std::size_t j) {
        if (!is_subset(up[j], up[i])) {
          throw Error(Errc::NotAPartialOrder,
                      "relation is not transitive at (" + carrier.label(i) + ", " + carrier.label(j) + ")");
        }
      });
    }
  }

  std::vector<Mask> down(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up[i], [&](std::size_t j) { down[j] |= bit(i); });
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Mask both = (up[i] & down[i]) & ~bit(i);
    if (both != 0) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(both));
      const std::string where = carrier.label(i) + " and " + carrier.label(j);
      if (kind == RelationKind::Covers) throw Error(Errc::CycleDetected, "cycle through " + where);
      throw Error(Errc::NotAPartialOrder, "antisymmetry fails for " + where);
    }
  }
  return Poset(std::move(carrier), std::move(down), std::move(up));
}

Mask Poset::upper_of(Mask a) const noexcept {
  Mask r = full_mask();
  for_each_bit(a, [&](std::size_t i) { r &= (*up_)[i]; });
  return r;
}

Mask Poset::lower_of(Mask a) const noexcept {
  Mask r = full_mask();
  for_each_bit(a, [&](std::size_t i) { r &= (*down_)[i]; });
  return r;
}

std::vector<Poset::IndexPair> Poset::covers() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Mask strict = up(i) & ~bit(i);
    for_each_bit(strict, [&](std::size_t j) {
      // j covers i unless some k lies strictly between.
      const Mask between = strict & down(j) & ~bit(j);
      if (between == 0) out.emplace_back(i, j);
    });
  }
  return out;
}

Subset down_set(const Poset& p, std::size_t a) {
  if (a >= p.size()) throw Error(Errc::UnknownElement, "element index out of range");
  return p.subset(p.down(a));
}

Subset down_set(const Poset& p, std::string_view a) { return down_set(p, p.index_of(a)); }

Subset up_set(const Poset& p, std::size_t a) {
  if (a >= p.size()) throw Error(Errc::UnknownElement, "element index out of range");
  return p.subset(p.up(a));
}

Subset up_set(const Poset& p, std::string_view a) { return up_set(p, p.index_of(a)); }

Subset upper_bounds(const Poset& p, const Subset& a) {
  require_parent(a, p.id());
  return p.subset(p.upper_of(a.mask()));
}

Subset lower_bounds(const Poset& p, const Subset& a) {
  require_parent(a, p.id());
  return p.subset(p.lower_of(a.mask()));
}

Subset minimals(const Poset& p) {
  Mask m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.down(i) == bit(i)) m |= bit(i);
  }
  return p.subset(m);
}

Subset maximals(const Poset& p) {
  Mask m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.up(i) == bit(i)) m |= bit(i);
  }
  return p.subset(m);
}

std::optional<std::size_t> least_in(const Poset& p, Mask among) {
  std::optional<std::size_t> found;
  for_each_bit(among, [&](std::size_t i) {
    if (!found && is_subset(among, p.up(i))) found = i;
  });
  return found;
}

std::optional<std::size_t> greatest_in(const Poset& p, Mask among) {
  std::optional<std::size_t> found;
  for_each_bit(among, [&](std::size_t i) {
    if (!found && is_subset(among, p.down(i))) found = i;
  });
  return found;
}

bool has_minimum(const Poset& p) { return p.size() > 0 && least_in(p, p.full_mask()).has_value(); }

bool has_maximum(const Poset& p) { return p.size() > 0 && greatest_in(p, p.full_mask()).has_value(); }

std::optional<std::vector<std::size_t>> order_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;

  auto signature = [](const Poset& s, std::size_t i) {
    return std::pair{cardinality(s.down(i)), cardinality(s.up(i))};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = signature(p, i);
    sq[i] = signature(q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> image(n, 0);
  Mask used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (contains(used, c) || sq[c] != sp[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = p.leq(i, j) == q.leq(c, image[j]) && p.leq(j, i) == q.leq(image[j], c);
      }
      if (!ok) continue;
      image[i] = c;
      used |= bit(c);
      if (extend(i + 1)) return true;
      used &= ~bit(c);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace ordcomp

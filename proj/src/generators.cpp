#include "ordcomp/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ordcomp/error.hpp"

namespace ordcomp::gen {

namespace {

void require_arity(std::size_t n, const Limits& limits) {
  limits.validate();
  if (n > limits.max_arity) {
    throw Error(Errc::ResourceCap,
                "instance of " + std::to_string(n) + " elements exceeds arity cap " + std::to_string(limits.max_arity));
  }
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

std::vector<std::vector<std::size_t>> all_functions(std::size_t g, std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(g, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = g;
    while (i > 0) {
      --i;
      if (++cur[i] < v) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (g == 0) return out;
  }
}

std::string function_label(const std::vector<std::size_t>& u, std::size_t v) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v > 10 && i > 0) s += '.';
    s += std::to_string(u[i]);
  }
  return s;
}

std::size_t checked_grid_size(std::size_t g, std::size_t v, const Limits& limits) {
  if (g == 0 || v == 0) throw Error(Errc::BadSpec, "gridfn needs g >= 1 and v >= 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < g; ++i) {
    total *= v;
    if (total > 4096) throw Error(Errc::ResourceCap, "gridfn has more than 4096 functions");
  }
  require_arity(total, limits);
  return total;
}

std::vector<std::size_t> apply_stencil(Stencil s, const std::vector<std::size_t>& u, std::size_t v) {
  const std::size_t g = u.size();
  std::vector<std::size_t> out(g);
  for (std::size_t i = 0; i < g; ++i) {
    switch (s) {
      case Stencil::Identity:
        out[i] = u[i];
        break;
      case Stencil::Shift:
        out[i] = u[(i + 1) % g];
        break;
      case Stencil::Raise:
        out[i] = std::min(u[i] + 1, v - 1);
        break;
      case Stencil::Smooth: {
        const std::size_t l = u[i == 0 ? 0 : i - 1];
        const std::size_t r = u[i + 1 == g ? i : i + 1];
        out[i] = (l + u[i] + r) / 3;
        break;
      }
      case Stencil::MaxNeighbor:
        out[i] = std::max(u[i], u[i + 1 == g ? i : i + 1]);
        break;
    }
  }
  return out;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "chain") return Family::Chain;
  if (name == "antichain") return Family::Antichain;
  if (name == "boolean") return Family::Boolean;
  if (name == "divisor") return Family::Divisor;
  if (name == "random") return Family::Random;
  if (name == "gridfn") return Family::Gridfn;
  throw Error(Errc::BadSpec, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Chain:
      return "chain";
    case Family::Antichain:
      return "antichain";
    case Family::Boolean:
      return "boolean";
    case Family::Divisor:
      return "divisor";
    case Family::Random:
      return "random";
    case Family::Gridfn:
      return "gridfn";
  }
  return "unknown";
}

Stencil parse_stencil(std::string_view name) {
  if (name == "identity") return Stencil::Identity;
  if (name == "shift") return Stencil::Shift;
  if (name == "raise") return Stencil::Raise;
  if (name == "smooth") return Stencil::Smooth;
  if (name == "max-neighbor") return Stencil::MaxNeighbor;
  throw Error(Errc::BadSpec, "unknown stencil '" + std::string(name) + "'");
}

std::string_view to_string(Stencil s) noexcept {
  switch (s) {
    case Stencil::Identity:
      return "identity";
    case Stencil::Shift:
      return "shift";
    case Stencil::Raise:
      return "raise";
    case Stencil::Smooth:
      return "smooth";
    case Stencil::MaxNeighbor:
      return "max-neighbor";
  }
  return "unknown";
}

Poset chain(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(Errc::BadSpec, "chain needs n >= 1");
  require_arity(n, limits);
  std::vector<Poset::IndexPair> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_indices(numbered("c", n), covers, RelationKind::Covers, limits);
}

Poset antichain(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(Errc::BadSpec, "antichain needs n >= 1");
  require_arity(n, limits);
  return Poset::from_indices(numbered("a", n), {}, RelationKind::Covers, limits);
}

Poset boolean_lattice(std::size_t k, const Limits& limits) {
  limits.validate();
  if (k >= 7 || (std::size_t{1} << k) > limits.max_arity) {
    throw Error(Errc::ResourceCap, "boolean(" + std::to_string(k) + ") exceeds arity cap");
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    std::string l = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1U) l += (l.size() > 1 ? "," : "") + std::to_string(i);
    }
    labels.push_back(l + "}");
  }
  std::vector<Poset::IndexPair> covers;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!((s >> i) & 1U)) covers.emplace_back(s, s | (std::size_t{1} << i));
    }
  }
  return Poset::from_indices(std::move(labels), covers, RelationKind::Covers, limits);
}

Poset divisor_lattice(std::uint64_t m, const Limits& limits) {
  if (m == 0) throw Error(Errc::BadSpec, "divisor needs m >= 1");
  limits.validate();
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    divs.push_back(d);
    if (d != m / d) divs.push_back(m / d);
    if (divs.size() > limits.max_arity) break;
  }
  require_arity(divs.size(), limits);
  std::sort(divs.begin(), divs.end());
  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));
  std::vector<Poset::IndexPair> rel;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = 0; j < divs.size(); ++j) {
      if (divs[j] % divs[i] == 0) rel.emplace_back(i, j);
    }
  }
  return Poset::from_indices(std::move(labels), rel, RelationKind::Full, limits);
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed, const Limits& limits) {
  if (n == 0) throw Error(Errc::BadSpec, "random needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw Error(Errc::BadSpec, "density must lie in [0, 1]");
  require_arity(n, limits);
  std::mt19937_64 rng(seed);
  std::vector<Poset::IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) < density) edges.emplace_back(i, j);
    }
  }
  return Poset::from_indices(numbered("e", n), edges, RelationKind::Covers, limits);
}

Poset grid_functions(std::size_t g, std::size_t v, const Limits& limits) {
  checked_grid_size(g, v, limits);
  const auto fns = all_functions(g, v);
  std::vector<std::string> labels;
  for (const auto& u : fns) labels.push_back(function_label(u, v));
  std::vector<Poset::IndexPair> rel;
  for (std::size_t a = 0; a < fns.size(); ++a) {
    for (std::size_t b = 0; b < fns.size(); ++b) {
      bool below = true;
      for (std::size_t i = 0; i < g; ++i) below = below && fns[a][i] <= fns[b][i];
      if (below) rel.emplace_back(a, b);
    }
  }
  return Poset::from_indices(std::move(labels), rel, RelationKind::Full, limits);
}

EquationInstance gridfn(std::size_t g, std::size_t v, Stencil stencil, const Limits& limits) {
  Poset y = grid_functions(g, v, limits);
  const auto fns = all_functions(g, v);
  std::vector<std::size_t> map(fns.size());
  for (std::size_t a = 0; a < fns.size(); ++a) {
    const auto out = apply_stencil(stencil, fns[a], v);
    map[a] = static_cast<std::size_t>(std::find(fns.begin(), fns.end(), out) - fns.begin());
  }
  return EquationInstance::build(y.carrier(), y, std::move(map), limits);
}

Instance generate(const GeneratorSpec& spec, const Limits& limits) {
  switch (spec.family) {
    case Family::Chain:
      return chain(spec.n, limits);
    case Family::Antichain:
      return antichain(spec.n, limits);
    case Family::Boolean:
      return boolean_lattice(spec.k, limits);
    case Family::Divisor:
      return divisor_lattice(spec.m, limits);
    case Family::Random:
      return random_poset(spec.n, spec.density, spec.seed, limits);
    case Family::Gridfn:
      return gridfn(spec.g, spec.v, spec.stencil, limits);
  }
  throw Error(Errc::BadSpec, "unknown family");
}

EquationInstance random_equation(std::uint64_t seed, const Limits& limits) {
  std::mt19937_64 rng(seed);
  const std::size_t nx = 1 + rng() % 6;
  const std::size_t ny = 1 + rng() % 6;
  Poset y = random_poset(ny, 0.35, rng(), limits);
  std::vector<std::size_t> map(nx);
  for (auto& t : map) t = rng() % ny;
  return EquationInstance::build(CarrierSet(numbered("x", nx)), std::move(y), std::move(map), limits);
}

CutMap random_increasing_cut_map(const CompletedPoset& source, const CompletedPoset& target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Canonical order lists every cut after all of its proper subcuts.
  std::vector<std::size_t> image(source.size());
  for (std::size_t a = 0; a < source.size(); ++a) {
    std::vector<std::size_t> below;
    for (std::size_t b = 0; b < a; ++b) {
      if (source.leq(b, a)) below.push_back(image[b]);
    }
    const std::size_t floor = sup_index(target, below);
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < target.size(); ++t) {
      if (target.leq(floor, t)) candidates.push_back(t);
    }
    image[a] = candidates[rng() % candidates.size()];
  }
  return CutMap(source, target, std::move(image));
}

PosetMap random_increasing_map(const Poset& source, const Poset& target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(source.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cardinality(source.down(a)) < cardinality(source.down(b));
  });
  std::vector<std::size_t> image(source.size());
  for (auto x : order) {
    Mask floor = 0;
    for_each_bit(source.down(x) & ~bit(x), [&](std::size_t p) { floor |= bit(image[p]); });
    const auto candidates = bit_indices(target.upper_of(floor));
    if (candidates.empty()) {
      // No common upper bound: fall back to a constant map.
      const std::size_t c = rng() % target.size();
      return PosetMap(source, target, std::vector<std::size_t>(source.size(), c));
    }
    image[x] = candidates[rng() % candidates.size()];
  }
  return PosetMap(source, target, std::move(image));
}

}  // namespace ordcomp::gen

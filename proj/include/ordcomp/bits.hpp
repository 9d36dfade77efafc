#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordcomp {

/// Bitmask over a carrier of at most 64 elements; bit i stands for element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxArity = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr bool contains(Mask m, std::size_t i) noexcept { return (m >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

constexpr std::size_t cardinality(Mask m) noexcept { return static_cast<std::size_t>(std::popcount(m)); }

template <class Fn>
constexpr void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bit_indices(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(m));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// ascending member index lists. For equal cardinality the set owning the
/// lowest element of the symmetric difference comes first.
constexpr bool canonical_less(Mask a, Mask b) noexcept {
  const auto ca = std::popcount(a);
  const auto cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace ordcomp

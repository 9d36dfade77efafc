#pragma once

// Batched bound/closure kernels over bitmask subsets.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The public entry
// points dispatch to the best variant supported by the running CPU; all
// variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "ordcomp/bits.hpp"

namespace ordcomp::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view name(Isa isa) noexcept;
bool supported(Isa isa) noexcept;
/// Best variant the running CPU supports.
Isa detected() noexcept;
/// Variant currently used by the dispatching entry points.
Isa active() noexcept;
/// Forces a variant; throws Error(BadSpec) if the CPU does not support it.
void set_active(Isa isa);

/// out[k] = AND of rows[i] over the members i of in[k]; an empty in[k]
/// yields `full`. With rows = up-sets this is A^u, with down-sets A^l.
/// Requires out.size() >= in.size() and every member index < rows.size().
void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full);

/// out[k] = (in[k]^u)^l.
void closure(std::span<const Mask> up, std::span<const Mask> down, std::span<const Mask> in, std::span<Mask> out,
             Mask full);

/// Classification of each in[k] against a fixed f.
inline constexpr std::uint8_t kSubsetOf = 1;    // in[k] ⊆ f
inline constexpr std::uint8_t kSupersetOf = 2;  // f ⊆ in[k]

void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out);

/// Union and intersection of the masks selected by `pick` (one flag byte per
/// mask, nonzero means selected). The intersection of nothing is `full`.
Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick);
Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full);

namespace scalar {
void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full);
void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out);
Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick);
Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full);
}  // namespace scalar

#if defined(ORDCOMP_HAVE_AVX2)
namespace avx2 {
void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full);
void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out);
Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick);
Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full);
}  // namespace avx2
#endif

#if defined(ORDCOMP_HAVE_NEON)
namespace neon {
void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full);
void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out);
Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick);
Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full);
}  // namespace neon
#endif

}  // namespace ordcomp::kernels

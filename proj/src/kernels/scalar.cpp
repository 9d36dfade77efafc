#include "ordcomp/kernels.hpp"

namespace ordcomp::kernels::scalar {

void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full) {
  for (std::size_t k = 0; k < in.size(); ++k) {
    Mask acc = full;
    for_each_bit(in[k], [&](std::size_t i) { acc &= rows[i]; });
    out[k] = acc;
  }
}

void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out) {
  for (std::size_t k = 0; k < in.size(); ++k) {
    std::uint8_t flags = 0;
    if (is_subset(in[k], f)) flags |= kSubsetOf;
    if (is_subset(f, in[k])) flags |= kSupersetOf;
    out[k] = flags;
  }
}

Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick) {
  Mask acc = 0;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (pick[k] != 0) acc |= in[k];
  }
  return acc;
}

Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full) {
  Mask acc = full;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (pick[k] != 0) acc &= in[k];
  }
  return acc;
}

}  // namespace ordcomp::kernels::scalar

#include <arm_neon.h>

#include "ordcomp/kernels.hpp"

namespace ordcomp::kernels::neon {

namespace {

inline uint64x2_t lanes_from_bytes(const std::uint8_t* pick) {
  const uint64x2_t wide = {pick[0], pick[1]};
  return vreinterpretq_u64_u32(vmvnq_u32(vreinterpretq_u32_u64(vceqzq_u64(wide))));
}

}  // namespace

void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full) {
  const std::size_t n = in.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t m = vld1q_u64(in.data() + k);
    uint64x2_t acc = vdupq_n_u64(full);
    for_each_bit(in[k] | in[k + 1], [&](std::size_t i) {
      const uint64x2_t absent = vceqzq_u64(vandq_u64(m, vdupq_n_u64(bit(i))));
      acc = vandq_u64(acc, vorrq_u64(vdupq_n_u64(rows[i]), absent));
    });
    vst1q_u64(out.data() + k, acc);
  }
  if (k < n) scalar::meet_rows(rows, in.subspan(k), out.subspan(k), full);
}

void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  const uint64x2_t fv = vdupq_n_u64(f);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t m = vld1q_u64(in.data() + k);
    const uint64x2_t sub = vceqzq_u64(vbicq_u64(m, fv));
    const uint64x2_t sup = vceqzq_u64(vbicq_u64(fv, m));
    for (int lane = 0; lane < 2; ++lane) {
      const bool s = (lane == 0 ? vgetq_lane_u64(sub, 0) : vgetq_lane_u64(sub, 1)) != 0;
      const bool p = (lane == 0 ? vgetq_lane_u64(sup, 0) : vgetq_lane_u64(sup, 1)) != 0;
      out[k + lane] = static_cast<std::uint8_t>((s ? kSubsetOf : 0) | (p ? kSupersetOf : 0));
    }
  }
  if (k < n) scalar::classify(in.subspan(k), f, out.subspan(k));
}

Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick) {
  const std::size_t n = in.size();
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    acc = vorrq_u64(acc, vandq_u64(vld1q_u64(in.data() + k), lanes_from_bytes(pick.data() + k)));
  }
  Mask r = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
  if (k < n) r |= scalar::join_selected(in.subspan(k), pick.subspan(k));
  return r;
}

Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full) {
  const std::size_t n = in.size();
  uint64x2_t acc = vdupq_n_u64(full);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t keep = lanes_from_bytes(pick.data() + k);
    acc = vandq_u64(acc, vornq_u64(vld1q_u64(in.data() + k), keep));
  }
  Mask r = vgetq_lane_u64(acc, 0) & vgetq_lane_u64(acc, 1);
  if (k < n) r &= scalar::meet_selected(in.subspan(k), pick.subspan(k), full);
  return r;
}

}  // namespace ordcomp::kernels::neon

#if defined(__x86_64__) && !defined(__AVX2__)
#error "this file must be compiled with -mavx2"
#endif

#include <immintrin.h>

#include <cstring>

#include "ordcomp/kernels.hpp"

namespace ordcomp::kernels::avx2 {

namespace {

inline __m256i load4(const Mask* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline void store4(Mask* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Expands four selector bytes into four all-ones / all-zero 64-bit lanes.
inline __m256i lanes_from_bytes(const std::uint8_t* pick) {
  std::uint32_t packed;
  std::memcpy(&packed, pick, sizeof(packed));
  const __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(packed)));
  return _mm256_xor_si256(_mm256_cmpeq_epi64(wide, _mm256_setzero_si256()), _mm256_set1_epi64x(-1));
}

inline Mask reduce_or(__m256i v) {
  alignas(32) Mask lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] | lanes[1] | lanes[2] | lanes[3];
}

inline Mask reduce_and(__m256i v) {
  alignas(32) Mask lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] & lanes[1] & lanes[2] & lanes[3];
}

}  // namespace

void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full) {
  const std::size_t n = in.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i m = load4(in.data() + k);
    const Mask any = in[k] | in[k + 1] | in[k + 2] | in[k + 3];
    __m256i acc = _mm256_set1_epi64x(static_cast<long long>(full));
    // Lanes lacking bit i get an all-ones mask so that row i is neutral there.
    for_each_bit(any, [&](std::size_t i) {
      const __m256i sel = _mm256_and_si256(m, _mm256_set1_epi64x(static_cast<long long>(bit(i))));
      const __m256i absent = _mm256_cmpeq_epi64(sel, zero);
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(rows[i]));
      acc = _mm256_and_si256(acc, _mm256_or_si256(row, absent));
    });
    store4(out.data() + k, acc);
  }
  if (k < n) scalar::meet_rows(rows, in.subspan(k), out.subspan(k), full);
}

void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out) {
  const std::size_t n = in.size();
  const __m256i zero = _mm256_setzero_si256();
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(f));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i m = load4(in.data() + k);
    // andnot(a, b) = ~a & b
    const __m256i outside_f = _mm256_andnot_si256(fv, m);
    const __m256i missing = _mm256_andnot_si256(m, fv);
    const int sub = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(outside_f, zero)));
    const int sup = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(missing, zero)));
    for (int lane = 0; lane < 4; ++lane) {
      out[k + lane] = static_cast<std::uint8_t>(((sub >> lane) & 1) * kSubsetOf | ((sup >> lane) & 1) * kSupersetOf);
    }
  }
  if (k < n) scalar::classify(in.subspan(k), f, out.subspan(k));
}

Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick) {
  const std::size_t n = in.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc = _mm256_or_si256(acc, _mm256_and_si256(load4(in.data() + k), lanes_from_bytes(pick.data() + k)));
  }
  Mask r = reduce_or(acc);
  if (k < n) r |= scalar::join_selected(in.subspan(k), pick.subspan(k));
  return r;
}

Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full) {
  const std::size_t n = in.size();
  __m256i acc = _mm256_set1_epi64x(static_cast<long long>(full));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i keep = lanes_from_bytes(pick.data() + k);
    // Unselected lanes contribute all-ones.
    acc = _mm256_and_si256(acc, _mm256_or_si256(load4(in.data() + k), _mm256_xor_si256(keep, _mm256_set1_epi64x(-1))));
  }
  Mask r = reduce_and(acc);
  if (k < n) r &= scalar::meet_selected(in.subspan(k), pick.subspan(k), full);
  return r;
}

}  // namespace ordcomp::kernels::avx2

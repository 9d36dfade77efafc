#include <atomic>

#include "ordcomp/error.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp::kernels {

namespace {

struct Table {
  void (*meet_rows)(std::span<const Mask>, std::span<const Mask>, std::span<Mask>, Mask);
  void (*classify)(std::span<const Mask>, Mask, std::span<std::uint8_t>);
  Mask (*join_selected)(std::span<const Mask>, std::span<const std::uint8_t>);
  Mask (*meet_selected)(std::span<const Mask>, std::span<const std::uint8_t>, Mask);
};

constexpr Table kScalar{scalar::meet_rows, scalar::classify, scalar::join_selected, scalar::meet_selected};
#if defined(ORDCOMP_HAVE_AVX2)
constexpr Table kAvx2{avx2::meet_rows, avx2::classify, avx2::join_selected, avx2::meet_selected};
#endif
#if defined(ORDCOMP_HAVE_NEON)
constexpr Table kNeon{neon::meet_rows, neon::classify, neon::join_selected, neon::meet_selected};
#endif

const Table& table_for(Isa isa) {
  switch (isa) {
#if defined(ORDCOMP_HAVE_AVX2)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(ORDCOMP_HAVE_NEON)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detected()};
  return isa;
}

const Table& active_table() { return table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(ORDCOMP_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(ORDCOMP_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on aarch64.
#else
      return false;
#endif
  }
  return false;
}

Isa detected() noexcept {
  if (supported(Isa::Avx2)) return Isa::Avx2;
  if (supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active() noexcept { return current().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!supported(isa)) {
    throw Error(Errc::BadSpec, std::string(name(isa)) + " kernels are not available on this CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

void meet_rows(std::span<const Mask> rows, std::span<const Mask> in, std::span<Mask> out, Mask full) {
  active_table().meet_rows(rows, in, out, full);
}

void closure(std::span<const Mask> up, std::span<const Mask> down, std::span<const Mask> in, std::span<Mask> out,
             Mask full) {
  const Table& t = active_table();
  t.meet_rows(up, in, out, full);
  // In-place second pass: each lane reads its own upper-bound mask only.
  t.meet_rows(down, std::span<const Mask>(out.data(), in.size()), out, full);
}

void classify(std::span<const Mask> in, Mask f, std::span<std::uint8_t> out) { active_table().classify(in, f, out); }

Mask join_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick) {
  return active_table().join_selected(in, pick);
}

Mask meet_selected(std::span<const Mask> in, std::span<const std::uint8_t> pick, Mask full) {
  return active_table().meet_selected(in, pick, full);
}

}  // namespace ordcomp::kernels

#include <atomic>

#include "stabeq/simd/modp_kernels.hpp"

namespace stabeq::simd {
namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t,
                        std::uint32_t);
using ScaleFn = void (*)(std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

struct KernelTable {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

constexpr KernelTable kScalarTable{Isa::scalar, &scalar::axpy_mod, &scalar::scale_mod};
#ifdef STABEQ_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{Isa::avx2, &avx2::axpy_mod, &avx2::scale_mod};
#endif

const KernelTable* table_for(Isa isa) {
#ifdef STABEQ_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2) return &kAvx2Table;
#endif
  (void)isa;
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{table_for(detected_isa())};
  return table;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#ifdef STABEQ_HAVE_AVX2_KERNELS
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed)->isa; }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  current().store(table_for(isa), std::memory_order_relaxed);
  return isa;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p) {
  current().load(std::memory_order_relaxed)->axpy(dst.data(), src.data(), dst.size(), c, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  current().load(std::memory_order_relaxed)->scale(dst.data(), dst.size(), c, p);
}

}  // namespace stabeq::simd

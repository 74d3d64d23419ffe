#pragma once

// Row kernels for arithmetic in F_p, p < 2^31, on residues stored as uint32.
// A portable scalar reference and an AVX2 variant; the variant is chosen at
// runtime from the CPU feature set and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>

namespace stabeq::simd {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// Best instruction set supported by both the build and the running CPU.
Isa detected_isa();
Isa active_isa();
/// Selects the kernel family; requests above `detected_isa()` are clamped.
/// Returns the ISA actually installed.
Isa set_active_isa(Isa isa);

/// dst[i] = (dst[i] + c * src[i]) mod p. Inputs must already be reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
/// dst[i] = c * dst[i] mod p.
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define STABEQ_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace stabeq::simd

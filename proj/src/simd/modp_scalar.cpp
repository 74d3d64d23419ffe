#include "stabeq/simd/modp_kernels.hpp"

namespace stabeq::simd::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(c) * src[i]) % p);
  }
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(std::uint64_t(c) * dst[i] % p);
  }
}

}  // namespace stabeq::simd::scalar

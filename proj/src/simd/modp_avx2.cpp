// Compiled with -mavx2; only called after a runtime CPU check.
#include "stabeq/simd/modp_kernels.hpp"

#include <immintrin.h>

namespace stabeq::simd::avx2 {
namespace {

// Shoup multiplication by a fixed multiplier c: with c_pre = floor(c * 2^32 / p)
// the quotient estimate q = (c_pre * y) >> 32 leaves c*y - q*p in [0, 2p).
struct Multiplier {
  __m256i c, c_pre, p, p_minus_1;
};

inline Multiplier make_multiplier(std::uint32_t c, std::uint32_t p) {
  std::uint64_t pre = (std::uint64_t(c) << 32) / p;
  return {_mm256_set1_epi64x(c), _mm256_set1_epi64x(static_cast<long long>(pre)),
          _mm256_set1_epi64x(p), _mm256_set1_epi64x(p - 1)};
}

inline __m256i reduce_once(__m256i v, const Multiplier& m) {
  __m256i over = _mm256_cmpgt_epi64(v, m.p_minus_1);
  return _mm256_sub_epi64(v, _mm256_and_si256(over, m.p));
}

// Four residues held in 64-bit lanes.
inline __m256i mul_lanes(__m256i y, const Multiplier& m) {
  __m256i prod = _mm256_mul_epu32(m.c, y);
  __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(m.c_pre, y), 32);
  __m256i r = _mm256_sub_epi64(prod, _mm256_mul_epu32(q, m.p));
  return reduce_once(r, m);
}

inline __m256i load4(const std::uint32_t* src) {
  return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store4(std::uint32_t* dst, __m256i lanes) {
  const __m256i pick = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  __m256i packed = _mm256_permutevar8x32_epi32(lanes, pick);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_castsi256_si128(packed));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  if (c == 0) return;
  const Multiplier m = make_multiplier(c, p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i sum = _mm256_add_epi64(load4(dst + i), mul_lanes(load4(src + i), m));
    store4(dst + i, reduce_once(sum, m));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, c, p);
}

void scale_mod(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const Multiplier m = make_multiplier(c, p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store4(dst + i, mul_lanes(load4(dst + i), m));
  }
  scalar::scale_mod(dst + i, n - i, c, p);
}

}  // namespace stabeq::simd::avx2

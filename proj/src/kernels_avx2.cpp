#include <immintrin.h>

#include "rankmetric/kernels.hpp"

namespace rankmetric::kernels {

namespace {

// Low 32 bits of eight uint64 lanes (lo holds lanes 0-3, hi lanes 4-7).
inline __m256i narrow(__m256i lo, __m256i hi) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  __m256i a = _mm256_permutevar8x32_epi32(lo, idx);
  __m256i b = _mm256_permutevar8x32_epi32(hi, idx);
  return _mm256_permute2x128_si256(a, b, 0x20);
}

}  // namespace

void rank_gf2_batch_avx2(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                         std::uint8_t* out) {
  const __m256i xm = _mm256_set1_epi64x(static_cast<long long>(xor_mask));
  const __m256i cmask = _mm256_set1_epi64x(static_cast<long long>((1ull << m) - 1));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i lo = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i)), xm);
    __m256i hi = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i + 4)), xm);
    __m256i basis[32];
    for (int b = 0; b < m; ++b) basis[b] = zero;
    __m256i rank = zero;
    for (int j = 0; j < n; ++j) {
      const __m128i sh = _mm_cvtsi32_si128(j * m);
      __m256i x = narrow(_mm256_and_si256(_mm256_srl_epi64(lo, sh), cmask),
                         _mm256_and_si256(_mm256_srl_epi64(hi, sh), cmask));
      for (int b = m - 1; b >= 0; --b) {
        const __m256i bit = _mm256_set1_epi32(1 << b);
        __m256i has = _mm256_cmpeq_epi32(_mm256_and_si256(x, bit), bit);
        __m256i empty = _mm256_cmpeq_epi32(basis[b], zero);
        __m256i ins = _mm256_and_si256(has, empty);
        basis[b] = _mm256_blendv_epi8(basis[b], x, ins);
        rank = _mm256_sub_epi32(rank, ins);
        // After an insertion basis[b] == x, so this also zeroes x.
        x = _mm256_xor_si256(x, _mm256_and_si256(basis[b], has));
      }
    }
    alignas(32) std::int32_t r[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(r), rank);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>(r[k]);
  }
  for (; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_gf2(in[i] ^ xor_mask, m, n));
}

}  // namespace rankmetric::kernels

#include "rankmetric/kernels.hpp"

namespace rankmetric::kernels {

int rank_gf2(std::uint64_t packed, int m, int n) {
  std::uint32_t basis[32] = {};
  const std::uint64_t mask = (1ull << m) - 1;
  int r = 0;
  for (int j = 0; j < n; ++j) {
    auto x = static_cast<std::uint32_t>((packed >> (j * m)) & mask);
    for (int b = m - 1; b >= 0 && x; --b) {
      if (!(x >> b & 1)) continue;
      if (!basis[b]) {
        basis[b] = x;
        ++r;
        break;
      }
      x ^= basis[b];
    }
  }
  return r;
}

void rank_gf2_batch_scalar(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                           std::uint8_t* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank_gf2(in[i] ^ xor_mask, m, n));
}

}  // namespace rankmetric::kernels

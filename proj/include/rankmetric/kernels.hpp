#pragma once

#include <cstddef>
#include <cstdint>

// Batch rank over GF(2). A vector of GF(2^m)^n is packed into a uint64 with
// coordinate j in bits [j*m, (j+1)*m); requires m <= 31 and m*n <= 64.

namespace rankmetric::kernels {

enum class Isa { Scalar, Avx2 };

// out[i] = rank(in[i] ^ xor_mask)
using RankBatchFn = void (*)(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                             std::uint8_t* out);

int rank_gf2(std::uint64_t packed, int m, int n);

void rank_gf2_batch_scalar(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                           std::uint8_t* out);
#if defined(RANKMETRIC_HAVE_AVX2)
void rank_gf2_batch_avx2(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                         std::uint8_t* out);
#endif

bool avx2_available();
Isa active_isa();
// Force a variant (tests, benchmarking). Throws if the CPU lacks it.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

void rank_gf2_batch(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                    std::uint8_t* out);

}  // namespace rankmetric::kernels

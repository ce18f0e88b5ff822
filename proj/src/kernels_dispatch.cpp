#include <atomic>

#include "rankmetric/errors.hpp"
#include "rankmetric/kernels.hpp"

namespace rankmetric::kernels {

namespace {

Isa detect() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_available() {
#if defined(RANKMETRIC_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) throw InvalidArgument("AVX2 is not available on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void rank_gf2_batch(const std::uint64_t* in, std::size_t count, std::uint64_t xor_mask, int m, int n,
                    std::uint8_t* out) {
#if defined(RANKMETRIC_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return rank_gf2_batch_avx2(in, count, xor_mask, m, n, out);
#endif
  rank_gf2_batch_scalar(in, count, xor_mask, m, n, out);
}

}  // namespace rankmetric::kernels

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "m2v/simd/kernels.hpp"

namespace m2v::simd {
namespace {

constexpr int kUnset = -1;
std::atomic<int> g_forced{kUnset};

Isa detect() {
  if (const char* env = std::getenv("M2V_FORCE_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa) && isa_supported(isa)) return isa;
    }
  }
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(M2V_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(M2V_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced != kUnset) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA not available: " + std::string(isa_name(isa)));
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(kUnset, std::memory_order_relaxed); }

std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus) {
  switch (active_isa()) {
#if defined(M2V_HAVE_AVX2)
    case Isa::avx2: return avx2::count_quadratic_roots(a2, a1, a0, modulus);
#endif
#if defined(M2V_HAVE_NEON)
    case Isa::neon: return neon::count_quadratic_roots(a2, a1, a0, modulus);
#endif
    default: return scalar::count_quadratic_roots(a2, a1, a0, modulus);
  }
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  switch (active_isa()) {
#if defined(M2V_HAVE_AVX2)
    case Isa::avx2: return avx2::dot_i32(a, b);
#endif
#if defined(M2V_HAVE_NEON)
    case Isa::neon: return neon::dot_i32(a, b);
#endif
    default: return scalar::dot_i32(a, b);
  }
}

}  // namespace m2v::simd

#include <arm_neon.h>

#include <algorithm>
#include <bit>

#include "m2v/simd/kernels.hpp"

namespace m2v::simd::neon {

std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus) {
  if (!std::has_single_bit(modulus)) return scalar::count_quadratic_roots(a2, a1, a0, modulus);

  const auto mask32 = static_cast<std::uint32_t>(modulus - 1);
  const uint32x4_t mask = vdupq_n_u32(mask32);
  const uint32x4_t va2 = vdupq_n_u32(static_cast<std::uint32_t>(a2));
  const uint32x4_t va1 = vdupq_n_u32(static_cast<std::uint32_t>(a1));
  const uint32x4_t va0 = vdupq_n_u32(static_cast<std::uint32_t>(a0));
  const uint32x4_t step = vdupq_n_u32(4);
  const uint32x4_t one = vdupq_n_u32(1);
  const std::uint32_t init[4] = {0, 1, 2, 3};
  uint32x4_t z = vld1q_u32(init);

  std::uint64_t hits = 0;
  std::uint64_t base = 0;
  for (; base + 4 <= modulus; base += 4) {
    uint32x4_t v = vmlaq_u32(va1, va2, z);
    v = vmlaq_u32(va0, v, z);
    v = vandq_u32(v, mask);
    hits += vaddvq_u32(vandq_u32(vceqzq_u32(v), one));
    z = vaddq_u32(z, step);
  }
  for (std::uint64_t r = base; r < modulus; ++r) {
    auto zz = static_cast<std::uint32_t>(r);
    std::uint32_t v = static_cast<std::uint32_t>(a2) * zz + static_cast<std::uint32_t>(a1);
    v = v * zz + static_cast<std::uint32_t>(a0);
    hits += ((v & mask32) == 0);
  }
  return hits;
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t x = vld1q_s32(a.data() + i);
    const int32x4_t y = vld1q_s32(b.data() + i);
    acc = vmlal_s32(acc, vget_low_s32(x), vget_low_s32(y));
    acc = vmlal_high_s32(acc, x, y);
  }
  std::int64_t sum = vaddvq_s64(acc);
  for (; i < n; ++i) sum += static_cast<std::int64_t>(a[i]) * b[i];
  return sum;
}

}  // namespace m2v::simd::neon

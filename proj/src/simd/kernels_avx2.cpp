#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "m2v/simd/kernels.hpp"

namespace m2v::simd::avx2 {

std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus) {
  if (!std::has_single_bit(modulus)) return scalar::count_quadratic_roots(a2, a1, a0, modulus);

  // Arithmetic mod 2^32 agrees with arithmetic mod any power of two <= 2^32,
  // so 32-bit lanes with mullo and a final mask are exact.
  const auto mask32 = static_cast<std::uint32_t>(modulus - 1);
  const __m256i mask = _mm256_set1_epi32(static_cast<int>(mask32));
  const __m256i va2 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(a2)));
  const __m256i va1 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(a1)));
  const __m256i va0 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(a0)));
  const __m256i step = _mm256_set1_epi32(8);
  const __m256i zero = _mm256_setzero_si256();
  __m256i z = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

  std::uint64_t hits = 0;
  std::uint64_t base = 0;
  for (; base + 8 <= modulus; base += 8) {
    __m256i v = _mm256_add_epi32(_mm256_mullo_epi32(va2, z), va1);
    v = _mm256_add_epi32(_mm256_mullo_epi32(v, z), va0);
    v = _mm256_and_si256(v, mask);
    const __m256i eq = _mm256_cmpeq_epi32(v, zero);
    hits += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
    z = _mm256_add_epi32(z, step);
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
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    // mul_epi32 multiplies the signed low halves of each 64-bit lane.
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(x, y));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(x, 32), _mm256_srli_epi64(y, 32)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += static_cast<std::int64_t>(a[i]) * b[i];
  return sum;
}

}  // namespace m2v::simd::avx2

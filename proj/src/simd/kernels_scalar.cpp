#include <algorithm>

#include "m2v/simd/kernels.hpp"

namespace m2v::simd::scalar {

std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus) {
  std::uint64_t hits = 0;
  for (std::uint64_t z = 0; z < modulus; ++z) {
    // modulus <= 2^31 keeps every product below 2^62.
    std::uint64_t v = (a2 * z + a1) % modulus;
    v = (v * z + a0) % modulus;
    hits += (v == 0);
  }
  return hits;
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::int64_t>(a[i]) * b[i];
  return acc;
}

}  // namespace m2v::simd::scalar

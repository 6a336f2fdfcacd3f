#include <random>

#include "doctest.h"
#include "m2v/simd/kernels.hpp"

using namespace m2v::simd;

namespace {

std::vector<Isa> vector_isas() {
  std::vector<Isa> v;
  for (Isa i : {Isa::avx2, Isa::neon}) {
    if (isa_supported(i)) v.push_back(i);
  }
  return v;
}

std::uint64_t variant_roots(Isa isa, std::uint64_t a2, std::uint64_t a1, std::uint64_t a0, std::uint64_t m) {
  switch (isa) {
#ifdef M2V_HAVE_AVX2
    case Isa::avx2: return avx2::count_quadratic_roots(a2, a1, a0, m);
#endif
#ifdef M2V_HAVE_NEON
    case Isa::neon: return neon::count_quadratic_roots(a2, a1, a0, m);
#endif
    default: return scalar::count_quadratic_roots(a2, a1, a0, m);
  }
}

std::int64_t variant_dot(Isa isa, std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  switch (isa) {
#ifdef M2V_HAVE_AVX2
    case Isa::avx2: return avx2::dot_i32(a, b);
#endif
#ifdef M2V_HAVE_NEON
    case Isa::neon: return neon::dot_i32(a, b);
#endif
    default: return scalar::dot_i32(a, b);
  }
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar reference") {
    CHECK(scalar::count_quadratic_roots(1, 0, 0, 8) == 2);  // z^2 = 0 mod 8: 0, 4
    CHECK(scalar::count_quadratic_roots(1, 0, 7, 8) == 4);  // z^2 = 1 mod 8
    CHECK(scalar::count_quadratic_roots(0, 0, 0, 16) == 16);
    CHECK(scalar::count_quadratic_roots(2, 3, 1, 7) == 2);
    const std::vector<std::int32_t> a{1, 2, 3}, b{4, 5, 6, 7};
    CHECK(scalar::dot_i32(a, b) == 32);
  }

  TEST_CASE("dispatch") {
    CHECK(isa_supported(Isa::scalar));
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    reset_isa();
    for (Isa i : {Isa::avx2, Isa::neon}) {
      if (!isa_supported(i)) CHECK_THROWS(force_isa(i));
    }
  }

  TEST_CASE("variants agree with scalar") {
    std::mt19937_64 rng(20261016);
    for (Isa isa : vector_isas()) {
      INFO(isa_name(isa));
      for (int trial = 0; trial < 4000; ++trial) {
        const std::uint64_t m = std::uint64_t{1} << (1 + rng() % 14);
        const std::uint64_t a2 = rng() % m, a1 = rng() % m, a0 = rng() % m;
        REQUIRE(variant_roots(isa, a2, a1, a0, m) == scalar::count_quadratic_roots(a2, a1, a0, m));
      }
      for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng() % 300;
        std::vector<std::int32_t> a(n), b(n + rng() % 3);
        std::uniform_int_distribution<std::int32_t> d(-(1 << 30), 1 << 30);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        REQUIRE(variant_dot(isa, a, b) == scalar::dot_i32(a, b));
      }
      // extremes
      std::vector<std::int32_t> lo(37, INT32_MIN), hi(37, INT32_MAX);
      CHECK(variant_dot(isa, lo, lo) == scalar::dot_i32(lo, lo));
      CHECK(variant_dot(isa, lo, hi) == scalar::dot_i32(lo, hi));
    }
  }

  TEST_CASE("forced isa gives the same public results") {
    std::mt19937_64 rng(7);
    std::vector<std::int32_t> a(1000), b(1000);
    for (auto& x : a) x = static_cast<std::int32_t>(rng() % 100000) - 50000;
    for (auto& x : b) x = static_cast<std::int32_t>(rng() % 100000) - 50000;
    force_isa(Isa::scalar);
    const auto ref = dot_i32(a, b);
    const auto roots = count_quadratic_roots(5, 6, 3, 1u << 12);
    reset_isa();
    CHECK(dot_i32(a, b) == ref);
    CHECK(count_quadratic_roots(5, 6, 3, 1u << 12) == roots);
  }
}

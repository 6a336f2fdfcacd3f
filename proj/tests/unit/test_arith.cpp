#include <numeric>

#include "doctest.h"
#include "m2v/arith.hpp"
#include "m2v/rational.hpp"

using namespace m2v;

TEST_SUITE("arith") {
  TEST_CASE("rational basics") {
    const Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational::parse("-14/6") == Rational(-7, 3));
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), OverflowError);
  }

  TEST_CASE("divisor sums") {
    CHECK(arith::sigma1(1) == 1);
    CHECK(arith::sigma1(12) == 28);
    CHECK(arith::sigma1_frac(12, 4) == 4);
    CHECK(arith::sigma1_frac(6, 4) == 0);
    CHECK(arith::lambda1(1) == Rational(1, 2));
    CHECK(arith::min_divisor_sum(12) == 1 + 2 + 3 + 3 + 2 + 1);
    CHECK(arith::sigma1_chi(7) == 8);
    CHECK(arith::sigma1_chi(3) == 2);
    CHECK(arith::chi8(1) == 1);
    CHECK(arith::chi8(3) == -1);
    CHECK(arith::chi8(5) == -1);
    CHECK(arith::chi8(7) == 1);
    CHECK(arith::chi8(-1) == 1);
    CHECK(arith::chi8(4) == 0);
  }

  TEST_CASE("multiplicativity") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
      for (std::uint64_t n = 1; n <= 60; ++n) {
        if (std::gcd(m, n) != 1) continue;
        CHECK(arith::sigma1(m * n) == arith::sigma1(m) * arith::sigma1(n));
        CHECK(arith::sigma1_chi(m * n) == arith::sigma1_chi(m) * arith::sigma1_chi(n));
      }
    }
  }

  TEST_CASE("sieve matches direct") {
    const arith::DivisorTable t(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      REQUIRE(t.sigma1(n) == arith::sigma1(n));
      REQUIRE(t.sigma1_chi(n) == arith::sigma1_chi(n));
      REQUIRE(t.min_divisor_sum(n) == arith::min_divisor_sum(n));
    }
    CHECK_THROWS_AS((void)t.sigma1(3001), FeasibilityError);
  }

  TEST_CASE("primes and square roots") {
    CHECK(arith::is_prime(2));
    CHECK_FALSE(arith::is_prime(1));
    CHECK(arith::is_prime(1000003));
    CHECK(arith::primes_below(30).size() == 10);
    CHECK(arith::isqrt(99) == 9);
    CHECK(arith::isqrt(~std::uint64_t{0}) == 4294967295u);
    CHECK(arith::square_root(144) == std::optional<std::uint64_t>(12));
    CHECK_FALSE(arith::is_square(2));
    const auto s = arith::split2(96);
    CHECK(s.nu == 5);
    CHECK(s.odd == 3);
    for (std::uint64_t p : {7u, 17u, 41u, 97u}) {
      const auto r = arith::sqrt_mod_prime(2, p);
      CHECK(r * r % p == 2);
    }
    CHECK(arith::legendre(2, 7) == 1);
    CHECK(arith::legendre(3, 7) == -1);
    CHECK(arith::legendre(14, 7) == 0);
  }
}

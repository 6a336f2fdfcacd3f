#include "doctest.h"
#include "m2v/classnum.hpp"

using namespace m2v;
using namespace m2v::classnum;

TEST_SUITE("classnum") {
  TEST_CASE("known Hurwitz values") {
    CHECK(hurwitz(0) == Rational(-1, 12));
    CHECK(hurwitz(3) == Rational(1, 3));
    CHECK(hurwitz(4) == Rational(1, 2));
    CHECK(hurwitz(7) == Rational(1));
    CHECK(hurwitz(8) == Rational(1));
    CHECK(hurwitz(11) == Rational(1));
    CHECK(hurwitz(12) == Rational(4, 3));
    CHECK(hurwitz(15) == Rational(2));
    CHECK(hurwitz(16) == Rational(3, 2));
    CHECK(hurwitz(23) == Rational(3));
    CHECK(hurwitz(1).is_zero());
    CHECK(hurwitz(2).is_zero());
  }

  TEST_CASE("table matches direct") {
    const HurwitzTable t(1500);
    for (std::int64_t n = 0; n <= 1500; ++n) REQUIRE(t(n) == hurwitz(n));
    CHECK_THROWS_AS((void)t(1501), FeasibilityError);
  }

  TEST_CASE("r3 and Gauss") {
    CHECK(r3(0) == 1);
    CHECK(r3(1) == 6);
    CHECK(r3(2) == 12);
    CHECK(r3(3) == 8);
    CHECK(r3(7) == 0);
    // r3(n) = 12 H(4n) for n = 1, 2 (mod 4), 24 H(n) for n = 3 (mod 8)
    for (std::int64_t n = 1; n < 400; ++n) {
      if (n % 4 == 1 || n % 4 == 2) REQUIRE(Rational(r3(n)) == Rational(12) * hurwitz(4 * n));
      if (n % 8 == 3) REQUIRE(Rational(r3(n)) == Rational(24) * hurwitz(n));
    }
  }

  TEST_CASE("rep tables") {
    const RepTable a({4, 1, 1}, 500);
    const RepTable three({1, 1, 1}, 500);
    for (std::int64_t n = 0; n <= 500; ++n) {
      REQUIRE(a(n) == rep_count_ternary({4, 1, 1}, n));
      REQUIRE(three(n) == r3(n));
    }
    CHECK(a(-3) == 0);
    CHECK(rep_count_ternary({4, 2, 1}, 7) == 8);
  }
}

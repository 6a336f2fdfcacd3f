#include <chrono>

#include "doctest.h"
#include "m2v/classnum.hpp"
#include "m2v/overpart.hpp"

using namespace m2v;
using namespace m2v::overpart;

TEST_SUITE("overpart") {
  TEST_CASE("m2 rank by hand") {
    // 3bar + 3 + 1: ell 3, chi 0 (largest also overlined)
    CHECK(m2_rank({{3}, {3, 1}}) == 2 - 3 + 2);
    // plain 3 + 1: chi 1
    CHECK(m2_rank({{}, {3, 1}}) == 2 - 2 + 2 - 1);
    // 4bar + 1bar: no plain parts
    CHECK(m2_rank({{4, 1}, {}}) == 2 - 2);
    CHECK(m2_rank({{}, {}}) == 0);
    const auto s = m2_stats({{}, {5, 2, 1, 1}});
    CHECK(s.ell == 5);
    CHECK(s.nparts == 4);
    CHECK(s.n_odd_plain == 3);
    CHECK(s.chi == 1);
  }

  TEST_CASE("overpartition counts") {
    const std::vector<std::int64_t> want{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
    const auto gen = overpartition_numbers(20);
    for (std::size_t n = 0; n < want.size(); ++n) CHECK(gen[n] == want[n]);
    for (std::int64_t n = 0; n <= 20; ++n) {
      std::int64_t k = 0;
      for_each_overpartition(n, [&](const Overpartition& op) {
        REQUIRE(op.weight() == n);
        ++k;
      });
      REQUIRE(k == gen[static_cast<std::size_t>(n)]);
    }
    CHECK(enumerate_overpartitions(3).size() == 8);
  }

  TEST_CASE("series head") {
    const std::vector<std::int64_t> want{1, 2, 4, 0, -2, 8, 8, -8, -4, 10, 8, 0, -8};
    const auto b = alpha2_brute_range(12);
    for (std::size_t n = 0; n < want.size(); ++n) {
      CHECK(b[n] == want[n]);
      CHECK(alpha2_brute(static_cast<std::int64_t>(n)) == want[n]);
      CHECK(alpha2_closed(static_cast<std::int64_t>(n)) == want[n]);
    }
  }

  TEST_CASE("brute equals closed and sign pattern") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto b = alpha2_brute_range(40);
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(60));
    for (std::int64_t n = 0; n <= 40; ++n) REQUIRE(b[static_cast<std::size_t>(n)] == alpha2_closed(n));
    const Alpha2Table t(3000);
    for (std::int64_t n = 1; n <= 3000; ++n) {
      const auto v = t(n);
      REQUIRE(v == alpha2_closed(n));
      if (n % 4 == 1 || n % 4 == 2) {
        REQUIRE(v >= 0);
      } else {
        REQUIRE(v <= 0);
      }
      REQUIRE(t.abs(n) == (v < 0 ? -v : v));
    }
  }

  TEST_CASE("ceiling") {
    CHECK_THROWS_AS(alpha2_brute(41), FeasibilityError);
    CHECK_THROWS_AS(alpha2_brute(10, 61), FeasibilityError);
  }
}

#include <cmath>
#include <set>

#include "doctest.h"
#include "m2v/arith.hpp"
#include "m2v/zsqrt2.hpp"

using namespace m2v;
using namespace m2v::zsqrt2;

namespace {

// -sqrt2 * sum over r in Z with 2(r^2 - 8n) a square of (|r| - sqrt(r^2 - 8n)),
// halved when r^2 = 8n. Each orbit under 3 + 2 sqrt2 is followed until the
// terms are negligible.
long double pell_sum(std::int64_t n) {
  const std::int64_t big = 8 * n;
  const auto r0 = static_cast<std::int64_t>(10 * std::sqrt(static_cast<double>(big))) + 10;
  std::set<__int128> rs;
  std::vector<std::pair<__int128, __int128>> seeds;
  for (std::int64_t r = 1; r <= r0; ++r) {
    const std::int64_t d = r * r - big;
    if (d < 0 || d % 2 != 0) continue;
    const auto s = arith::square_root(static_cast<std::uint64_t>(d / 2));
    if (!s) continue;
    rs.insert(r);
    seeds.emplace_back(r, static_cast<std::int64_t>(*s));
    seeds.emplace_back(r, -static_cast<std::int64_t>(*s));
  }
  const __int128 stop = static_cast<__int128>(1) << 70;
  for (auto [r, s] : seeds) {
    while (r < stop) {
      const __int128 nr = 3 * r + 4 * s, ns = 2 * r + 3 * s;
      r = nr;
      s = ns;
      if (r > r0) rs.insert(r);
    }
  }
  long double total = 0;
  for (__int128 r : rs) {
    const long double lr = static_cast<long double>(r);
    const long double d = lr * lr - static_cast<long double>(big);
    // |r| - sqrt(r^2 - 8n) = 8n / (|r| + sqrt(r^2 - 8n)), stable for large r
    long double term = static_cast<long double>(big) / (lr + std::sqrt(std::max(d, 0.0L)));
    if (r <= r0 && r * r == big) term /= 2;
    total += 2 * term;  // r and -r
  }
  return -std::sqrt(2.0L) * total;
}

}  // namespace

TEST_SUITE("zsqrt2") {
  TEST_CASE("element arithmetic") {
    CHECK(multiply(kFundamentalUnit, kFundamentalUnit) == Element{3, 2});
    CHECK(kNormOneUnit.norm() == 1);
    CHECK(kFundamentalUnit.norm() == -1);
    CHECK(conjugate(Element{4, 1}) == Element{4, -1});
    CHECK(Element{4, 1}.norm() == 14);
  }

  TEST_CASE("reduction") {
    CHECK(reduce_to_minimal_trace(4, 1) == IdealRep{4, 1, 14});
    CHECK(reduce_to_minimal_trace(0, 1) == IdealRep{2, 1, 2});
    CHECK(reduce_to_minimal_trace(2, 0) == IdealRep{2, 0, 4});
    // (4 + sqrt2)(3 + 2 sqrt2) = 16 + 11 sqrt2
    CHECK(reduce_to_minimal_trace(16, 11) == IdealRep{4, 1, 14});
    for (std::int64_t a = -30; a <= 30; ++a) {
      for (std::int64_t b = -30; b <= 30; ++b) {
        if (a == 0 && b == 0) continue;
        const IdealRep r = reduce_to_minimal_trace(a, b);
        REQUIRE(r.a > 0);
        REQUIRE(reduce_to_minimal_trace(r.a, r.b) == r);
        const std::int64_t nrm = a * a - 2 * b * b;
        REQUIRE(r.norm == static_cast<std::uint64_t>(nrm < 0 ? -nrm : nrm));
      }
    }
  }

  TEST_CASE("ideal lists") {
    CHECK(ideals_of_norm(14) == std::vector<IdealRep>{{4, -1, 14}, {4, 1, 14}});
    CHECK(ideals_of_norm(3).empty());
    CHECK(ideals_of_norm(1).size() == 1);
    CHECK(correction_sum(14) == -6);
    CHECK(correction_sum(2) == -1);
    CHECK(correction_sum(4) == -2);
    CHECK(correction_sum(8) == -2);
    for (std::uint64_t m = 1; m <= 2000; ++m) {
      const auto fast = ideals_of_norm(m);
      REQUIRE(fast == ideals_of_norm_brute(m));
      // closed under conjugation
      std::set<IdealRep> s(fast.begin(), fast.end());
      for (const auto& r : fast) REQUIRE(s.count(reduce_to_minimal_trace(r.a, -r.b)) == 1);
      REQUIRE(correction_sum(m) == correction_sum_conjugation_orbits(m));
    }
  }

  TEST_CASE("pell sum equals ideal sum") {
    for (std::int64_t n = 1; 2 * n <= 400; ++n) {
      const long double want = 4.0L * static_cast<long double>(correction_sum(static_cast<std::uint64_t>(2 * n)));
      INFO("n = " << n);
      REQUIRE(std::fabs(static_cast<double>(pell_sum(n) - want)) < 1e-9);
    }
  }
}

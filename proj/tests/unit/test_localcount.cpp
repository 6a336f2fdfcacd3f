#include "doctest.h"
#include "m2v/arith.hpp"
#include "m2v/localcount.hpp"

using namespace m2v;
using namespace m2v::localcount;
using qseries::CosetVector;
using qseries::GramForm;

namespace {

std::vector<Rational> rats(std::initializer_list<std::int64_t> v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("localcount") {
  TEST_CASE("small counts") {
    const GramForm q2 = GramForm::diagonal({4, -2, 4});
    CHECK(count_congruence(q2, CosetVector::zero(q2), Rational(), 2, 0) == 1);
    CHECK(count_congruence(q2, CosetVector::zero(q2), Rational(), 2, 1) == 4);
    const auto c = density_ratio_sequence(q2, CosetVector::zero(q2), Rational(), 2, 8);
    const std::vector<Rational> want{1, 1, 1, 1, Rational(3, 2), Rational(3, 2), Rational(7, 4), Rational(7, 4),
                                     Rational(15, 8)};
    CHECK(c == want);
  }

  TEST_CASE("fiber bound") {
    const GramForm f = GramForm::diagonal({4, -4, 2});
    const std::vector<CosetVector> cosets{CosetVector::zero(f), CosetVector(f, {0, 0, Rational(1, 2)}),
                                          CosetVector(f, {Rational(1, 4), Rational(1, 4), 0})};
    for (const auto& g : cosets) {
      for (const Rational n : {Rational(0), Rational(3, 4), Rational(7, 4), Rational(1, 2)}) {
        std::vector<std::uint64_t> s;
        try {
          s = count_sequence(f, g, n, 2, 7);
        } catch (const DomainError&) {
          continue;
        }
        for (std::size_t k = 0; k + 1 < s.size(); ++k) REQUIRE(s[k + 1] <= 8 * s[k]);
      }
    }
  }

  TEST_CASE("odd primes") {
    // Hensel lifting plus the first-level count from a Legendre symbol.
    const GramForm f = GramForm::diagonal({2, 4, 6});
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
      for (std::int64_t n = 1; n <= 12; ++n) {
        if (static_cast<std::uint64_t>(n) % p == 0) continue;
        const unsigned top = p <= 7 ? 3 : 2;
        const auto s = count_sequence(f, CosetVector::zero(f), Rational(n), p, top);
        CHECK(s[1] == p * p + p * arith::legendre(6 * n, p));
        for (unsigned k = 1; k < top; ++k) CHECK(s[k + 1] == p * p * s[k]);
      }
    }
  }

  TEST_CASE("recurrence fit") {
    const auto c = rats({1, 1, 1, 1, 1});
    const auto fit = fit_affine_recurrence(c);
    REQUIRE(fit);
    CHECK(fit->order == 0);
    CHECK(fixed_point(*fit) == Rational(1));

    // c_k = 2 - 2^-k
    std::vector<Rational> g;
    for (int k = 0; k < 9; ++k) g.push_back(Rational(2) - Rational(1, std::int64_t{1} << k));
    const auto gf = fit_affine_recurrence(g);
    REQUIRE(gf);
    CHECK(gf->order == 1);
    CHECK(gf->stable);
    CHECK(fixed_point(*gf) == Rational(2));

    // too few terms to confirm anything
    CHECK_FALSE(fit_affine_recurrence(rats({1, 2, 4})));

    // coefficients low to high
    CHECK(roots_inside_unit_disk(std::vector<Rational>{Rational(-1, 2), 1}));
    CHECK_FALSE(roots_inside_unit_disk(std::vector<Rational>{-2, 1}));
    CHECK(roots_inside_unit_disk(std::vector<Rational>{0, 1}));
    CHECK_FALSE(roots_inside_unit_disk(std::vector<Rational>{-1, 0, 1}));
    CHECK(roots_inside_unit_disk(std::vector<Rational>{Rational(1, 4), Rational(-1, 2), 1}));
  }

  TEST_CASE("limit values") {
    const GramForm q2 = GramForm::diagonal({4, -2, 4});
    const auto o = local_factor(q2, CosetVector::zero(q2), Rational(), 2, 8);
    CHECK(o.value == Rational(2));
    CHECK(o.fit.stable);
    CHECK(o.fit.determined_by <= 6);
    CHECK_FALSE(o.constant_from);

    const GramForm qt = GramForm::diagonal({4, -4, 2});
    CHECK(local_factor(qt, CosetVector::zero(qt), Rational(), 2, 8).value == Rational(2));
    const auto g = local_factor(qt, CosetVector(qt, {Rational(1, 4), Rational(1, 4), 0}), Rational(), 2, 8);
    CHECK(g.value == Rational(1));
    CHECK(g.constant_from == std::optional<unsigned>(0));

    const GramForm x2 = GramForm::diagonal({2});
    CHECK(local_factor(x2, CosetVector(x2, {Rational(1, 2)}), Rational(7, 4), 2, 8).value == Rational(3, 2));
    const CosetVector half(qt, {0, 0, Rational(1, 2)});
    for (std::int64_t m = 3; m < 64; m += 4) {
      const Rational v = local_factor(qt, half, Rational(m, 4), 2, 6).value;
      CHECK(v == (m % 8 == 7 ? Rational(2) : Rational()));
    }
  }

  TEST_CASE("errors") {
    const GramForm q2 = GramForm::diagonal({4, -2, 4});
    const CosetVector g(q2, {Rational(1, 4), 0, 0});
    CHECK_THROWS_AS(count_congruence(q2, g, Rational(), 2, 2), DomainError);
    CHECK_THROWS_AS(count_congruence(q2, CosetVector::zero(q2), Rational(), 2, 12), FeasibilityError);
  }

  TEST_CASE("tabulated series") {
    const auto s = tabulated_local_series(ShadowCase::special, 6);
    CHECK(s.valuation == 0);
    CHECK(s.at(0) == Rational(1));
    CHECK(s.at(1) == Rational(4));
    CHECK(s.at(2) == Rational(32));
    CHECK(s.at(3) == Rational(128));
    const auto gen = tabulated_local_series(ShadowCase::generic, 6);
    CHECK(gen.at(5) == Rational(1024));
    const auto o = tabulated_local_series(ShadowCase::origin, 6);
    CHECK(o.valuation == -2);
    CHECK(o.at(-2) == Rational(1));
    CHECK(o.at(0) == Rational(16));
    // matches the counts only in the limit
    const GramForm q2 = GramForm::diagonal({4, -2, 4});
    const auto counts = count_sequence(q2, CosetVector::zero(q2), Rational(), 2, 2);
    CHECK(o.at(0) != Rational(static_cast<std::int64_t>(counts[0])));
    const auto e = expand_rational(rats({1}), rats({1, -1}), 0, 4);
    CHECK(e.at(3) == Rational(1));
  }
}

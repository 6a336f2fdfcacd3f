#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "m2v/verify/identities.hpp"
#include "m2v/verify/report.hpp"

using namespace m2v;
using namespace m2v::verify;

namespace {

Context context_for(IdentityId id, std::int64_t hi) { return Context(limits_for(id, hi)); }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("catalogue") {
    CHECK(all_identities().size() == 23);
    for (IdentityId id : all_identities()) CHECK(parse_identity(identity_name(id)) == id);
    CHECK_THROWS_AS(parse_identity("prop3"), std::invalid_argument);
  }

  TEST_CASE("spot values") {
    const Context ctx = context_for(IdentityId::prop4, 10);
    CHECK(lhs_value(ctx, IdentityId::prop4, 7) == Rational(24));
    CHECK(closed_form(ctx, IdentityId::prop4, 7) == Rational(24));
    CHECK(lhs_value(ctx, IdentityId::prop4, 1) == Rational(2));
    const Context c5 = context_for(IdentityId::cor5iii, 10);
    CHECK(closed_form(c5, IdentityId::cor5iii, 3) == Rational(1, 3));
    CHECK(lhs_value(c5, IdentityId::cor5iii, 3) == Rational(1, 3));
    CHECK_THROWS_AS(closed_form(c5, IdentityId::cor5iii, 4), DomainError);
    const Context c2 = context_for(IdentityId::prop2, 10);
    CHECK(lhs_value(c2, IdentityId::prop2, 1) == Rational(4));
  }

  TEST_CASE("prop2 small range and example") {
    const Context ctx = context_for(IdentityId::prop2, 100);
    const auto r = check_identity(ctx, IdentityId::prop2, {1, 100});
    CHECK(r.reports.size() == 300);
    CHECK(r.failures() == 0);
    const Context c12 = context_for(IdentityId::example12, 7);
    const auto e = check_identity(c12, IdentityId::example12, {7, 7});
    CHECK(e.failures() == 0);
    CHECK(e.reports.front().lhs == Rational(24));
  }

  TEST_CASE("two alpha conventions differ by sign") {
    const Context ctx = context_for(IdentityId::e2A_quasimodular, 2000);
    const auto r = check_identity(ctx, IdentityId::e2A_quasimodular, {0, 2000});
    std::size_t seen = 0;
    for (const auto& row : r.reports) {
      if (row.label != "prop2_alpha") continue;
      ++seen;
      REQUIRE(row.pass);
    }
    CHECK(seen == 2000);
  }

  TEST_CASE("ranges") {
    SuiteRequest req;
    req.max = 200000;
    CHECK_THROWS_AS(effective_range(req, IdentityId::prop2), FeasibilityError);
    req.max = 5;
    req.min = 9;
    CHECK_THROWS_AS(effective_range(req, IdentityId::prop2), std::invalid_argument);
    req.min.reset();
    req.max = 80;
    CHECK_THROWS_AS(effective_range(req, IdentityId::prop1_series), FeasibilityError);
    CHECK(effective_range(req, IdentityId::example12).lo == 7);
  }

  TEST_CASE("empty suite") {
    const auto r = run_suite(SuiteRequest{});
    CHECK(r.reports.empty());
    CHECK(exit_status(r) == 0);
  }

  TEST_CASE("ordering does not depend on workers") {
    SuiteRequest req;
    req.ids = {IdentityId::jacobi, IdentityId::cor3, IdentityId::lemma9ii, IdentityId::inert_primes};
    req.max = 300;
    req.workers = 1;
    const auto a = run_suite(req);
    req.workers = 4;
    const auto b = run_suite(req);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      REQUIRE(a.reports[i].id == b.reports[i].id);
      REQUIRE(a.reports[i].n == b.reports[i].n);
      REQUIRE(a.reports[i].label == b.reports[i].label);
    }
    for (std::size_t i = 1; i < a.reports.size(); ++i) {
      if (a.reports[i].id == a.reports[i - 1].id) REQUIRE(a.reports[i - 1].n <= a.reports[i].n);
    }
  }

  TEST_CASE("component listing is flagged, not failed") {
    SuiteRequest req;
    req.ids = {IdentityId::prop1_series};
    req.max = 10;
    const auto r = run_suite(req);
    CHECK(exit_status(r) == 0);
    REQUIRE(r.discrepancies.size() == 1);
    CHECK(r.discrepancies[0].n == 4);
    CHECK(r.discrepancies[0].printed == Rational(-4));
    CHECK(r.discrepancies[0].computed == Rational(-2));
    CHECK(r.discrepancies[0].tag == "suspected typo, brute-force value authoritative");
  }

  TEST_CASE("a broken row makes the status 1") {
    CheckResult r;
    r.reports.push_back(make_report(IdentityId::jacobi, 1, Rational(1), Rational(2)));
    CHECK(exit_status(r) == 1);
    CHECK(r.reports[0].residual == Rational(-1));
  }

  TEST_CASE("writers") {
    CheckResult r;
    r.reports.push_back(make_report(IdentityId::cor3, 2, Rational(3, 2), Rational(3, 2)));
    r.reports.push_back(make_report(IdentityId::inert_primes, 3, Rational(1), Rational(1), "p"));
    std::ostringstream tsv, js;
    write_tsv(tsv, r);
    CHECK(tsv.str().rfind("identity\tn\tlhs\trhs\tresidual\tpass\ncor3\t2\t3/2\t3/2\t0/1\ttrue\n", 0) == 0);
    write_json(js, r);
    const auto j = nlohmann::json::parse(js.str());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["lhs"] == "3/2");
    CHECK(j[0]["pass"] == true);
    CHECK_FALSE(j[0].contains("label"));
    CHECK(j[1]["label"] == "p");
  }
}

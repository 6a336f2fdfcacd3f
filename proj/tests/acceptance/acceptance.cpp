// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "m2v/localcount.hpp"
#include "m2v/overpart.hpp"
#include "m2v/verify/identities.hpp"

using namespace m2v;
using verify::IdentityId;

namespace {

int failures = 0;

void line(int k, bool ok, const std::string& what, double seconds) {
  std::printf("criterion %2d %s  %s (%.2f s)\n", k, ok ? "PASS" : "FAIL", what.c_str(), seconds);
  if (!ok) ++failures;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(int k, const std::function<bool(std::ostringstream&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream what;
  bool ok = false;
  try {
    ok = body(what);
  } catch (const std::exception& e) {
    what << " threw: " << e.what();
  }
  line(k, ok, what.str(), since(t0));
}

verify::CheckResult run(std::vector<IdentityId> ids) {
  verify::SuiteRequest req;
  req.ids = std::move(ids);
  return verify::run_suite(req);
}

// Rows checked, all passing, and an optional count of rows carrying a label.
bool all_pass(const verify::CheckResult& r, std::ostringstream& what) {
  what << r.reports.size() << " rows, " << r.failures() << " failed";
  return !r.reports.empty() && r.failures() == 0;
}

std::size_t count_label(const verify::CheckResult& r, IdentityId id, const std::string& label) {
  std::size_t k = 0;
  for (const auto& row : r.reports) k += row.id == id && row.label == label && row.pass;
  return k;
}

bool covers(const verify::CheckResult& r, IdentityId id, std::int64_t lo, std::int64_t hi) {
  std::int64_t a = hi + 1, b = lo - 1;
  for (const auto& row : r.reports) {
    if (row.id != id || !row.label.empty()) continue;
    a = std::min(a, row.n);
    b = std::max(b, row.n);
  }
  return a <= lo + 7 && b >= hi - 7;
}

}  // namespace

int main() {
  criterion(1, [](auto& what) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::int64_t> want{1, 2, 4, 0, -2, 8, 8};
    bool ok = true;
    for (std::int64_t n = 0; n <= 6; ++n) ok &= overpart::alpha2_brute(n) == want[static_cast<std::size_t>(n)];
    const double s = since(t0);
    what << "enumerated alpha2(0..6) = 1 2 4 0 -2 8 8, under 1 s";
    return ok && s < 1.0;
  });

  criterion(2, [](auto& what) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto b = overpart::alpha2_brute_range(40);
    int bad = 0;
    for (std::int64_t n = 0; n <= 40; ++n) bad += b[static_cast<std::size_t>(n)] != overpart::alpha2_closed(n);
    const double s = since(t0);
    what << "enumeration equals closed form for n <= 40 (" << overpart::overpartition_numbers(40)[40]
         << " overpartitions at 40), " << bad << " mismatches, under 60 s";
    return bad == 0 && s < 60.0;
  });

  criterion(3, [](auto& what) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run({IdentityId::prop2});
    what << "prop2 n = 1..10000 with bridge and unassembled rows: ";
    return all_pass(r, what) && covers(r, IdentityId::prop2, 1, 10000) && since(t0) < 300.0;
  });

  criterion(4, [](auto& what) {
    const auto r = run({IdentityId::cor3});
    what << "cor3 n = 1..10000: ";
    return all_pass(r, what) && covers(r, IdentityId::cor3, 1, 10000);
  });

  criterion(5, [](auto& what) {
    const auto r = run({IdentityId::prop4, IdentityId::example12});
    bool ties = true;
    for (std::int64_t n : {2, 8, 18, 32, 50, 4050}) {
      bool seen = false;
      for (const auto& row : r.reports) seen |= row.id == IdentityId::prop4 && row.n == n && row.pass;
      ties &= seen;
    }
    bool ex = false;
    for (const auto& row : r.reports) {
      if (row.id == IdentityId::example12 && row.label.empty()) ex = row.lhs == Rational(24) && row.rhs == Rational(24);
    }
    const auto terms = count_label(r, IdentityId::example12, "term of (4-1sqrt2)") +
                       count_label(r, IdentityId::example12, "term of (4+1sqrt2)");
    what << "prop4 n = 1..5000 incl. 2n square, example n = 7 gives 24 = 48 - 12 - 12: ";
    return all_pass(r, what) && covers(r, IdentityId::prop4, 1, 5000) && ties && ex && terms == 2 &&
           count_label(r, IdentityId::example12, "divisor term") == 1;
  });

  criterion(6, [](auto& what) {
    const auto r = run({IdentityId::cor5i, IdentityId::cor5ii, IdentityId::cor5iii, IdentityId::inert_primes,
                        IdentityId::remark13});
    const auto p2 = count_label(r, IdentityId::inert_primes, "2p");
    const auto p1 = count_label(r, IdentityId::inert_primes, "p");
    what << "cor5 i/ii/iii n <= 5000, " << p1 << " inert primes below 1000 with all three sums and 2(p-1): ";
    return all_pass(r, what) && p1 == 87 && p2 == 87 && covers(r, IdentityId::cor5i, 1, 5000) &&
           covers(r, IdentityId::cor5iii, 1, 5000);
  });

  criterion(7, [](auto& what) {
    const auto r = run({IdentityId::jacobi, IdentityId::jacobi_alt, IdentityId::eichler4n, IdentityId::eichler_odd});
    what << "jacobi, alternating jacobi, both eichler relations n <= 10000: ";
    return all_pass(r, what) && covers(r, IdentityId::jacobi, 1, 10000) && covers(r, IdentityId::eichler_odd, 1, 10000);
  });

  criterion(8, [](auto& what) {
    const auto r = run({IdentityId::remark6_theta, IdentityId::remark10_eta, IdentityId::remark10_repsums,
                        IdentityId::lemma7, IdentityId::lemma9i, IdentityId::lemma9ii});
    const auto printed = count_label(r, IdentityId::lemma7, "printed") + count_label(r, IdentityId::lemma9i, "printed") +
                         count_label(r, IdentityId::lemma9ii, "printed") + count_label(r, IdentityId::remark10_eta, "printed");
    what << "theta difference to 1000, eta quotient and rep sums to 2000, weight 3/2 components, " << printed
         << "/18 leading coefficients: ";
    return all_pass(r, what) && printed == 18 && count_label(r, IdentityId::remark10_repsums, "rB") == 2000 &&
           covers(r, IdentityId::remark6_theta, 0, 1000) && covers(r, IdentityId::remark10_eta, 1, 2000);
  });

  criterion(9, [](auto& what) {
    const auto r = run({IdentityId::e2A_quasimodular, IdentityId::e2B_series});
    const auto printed = count_label(r, IdentityId::e2B_series, "printed");
    what << "E2 combination to 2000, sign link to prop2, e2B head " << printed << "/7: ";
    return all_pass(r, what) && printed == 7 && count_label(r, IdentityId::e2A_quasimodular, "prop2_alpha") == 2000;
  });

  criterion(10, [](auto& what) {
    using qseries::CosetVector;
    using qseries::GramForm;
    constexpr std::uint64_t kCeiling = std::uint64_t{1} << 24;
    bool ok = true;
    const GramForm q2 = GramForm::diagonal({4, -2, 4});
    const GramForm qt = GramForm::diagonal({4, -4, 2});
    for (const GramForm* f : {&q2, &qt}) {
      const auto lf = localcount::local_factor(*f, CosetVector::zero(*f), Rational(), 2, 8, kCeiling);
      ok &= lf.value == Rational(2) && lf.fit.stable && lf.fit.determined_by <= 6 && lf.fit.confirmations >= 2;
      what << "gamma=0 limit " << lf.value << " (recurrence order " << lf.fit.order << " fixed by nu <= "
           << lf.fit.determined_by << ", raw ratio constant: " << (lf.constant_from ? "yes" : "no") << "); ";
    }
    int generic = 0;
    for (const auto& g : std::vector<std::vector<Rational>>{{Rational(1, 4), Rational(1, 4), 0},
                                                            {Rational(1, 4), Rational(3, 4), 0},
                                                            {Rational(3, 4), Rational(1, 4), 0},
                                                            {Rational(3, 4), Rational(3, 4), 0}}) {
      const auto lf = localcount::local_factor(qt, CosetVector(qt, g), Rational(), 2, 8, kCeiling);
      ok &= lf.value == Rational(1) && lf.constant_from && *lf.constant_from <= 6;
      ++generic;
    }
    what << generic << " generic cosets at 1";
    return ok;
  });

  criterion(11, [](auto& what) {
    verify::SuiteRequest req;
    req.ids = verify::all_identities();
    const auto r = verify::run_suite(req);
    bool tagged = true;
    for (const auto& d : r.discrepancies) tagged &= d.tag == "suspected typo, brute-force value authoritative";
    what << "full default suite: " << r.reports.size() << " rows, exit " << verify::exit_status(r) << ", "
         << r.discrepancies.size() << " tagged discrepancies";
    for (const auto& d : r.discrepancies) what << " [" << verify::identity_name(d.id) << ": " << d.what << "]";
    return verify::exit_status(r) == 0 && r.discrepancies.size() == 2 && tagged;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}

#include "m2v/verify/identities.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "m2v/arith.hpp"
#include "m2v/localcount.hpp"
#include "m2v/qseries.hpp"
#include "m2v/zsqrt2.hpp"

namespace m2v::verify {
namespace {

using qseries::CosetVector;
using qseries::GramForm;
using qseries::QSeries;

struct Entry {
  IdentityId id;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array kCatalogue{
    Entry{IdentityId::prop2, "prop2",
          "sum|a2(n-r^2)| + class number and divisor terms = 4s(n) / 24s(n/2) / 8s(n/2)+16s(n/4) by n mod 4"},
    Entry{IdentityId::cor3, "cor3", "sum_{r odd} H(4n-r^2), three cases by n mod 4"},
    Entry{IdentityId::prop4, "prop4",
          "sum|a2(n-2r^2)| = 2s(n,chi)(2+chi(m)/2^v) + 4 sum_{N(a)=2n}(|b|-a) + 4[2n square]"},
    Entry{IdentityId::cor5i, "cor5i", "sum H(4n-2r^2) = (2/3)s(n,chi)(2+chi(m)/2^(v+2)) + (1/2) sum_{N(a)=8n}(|b|-a)"},
    Entry{IdentityId::cor5ii, "cor5ii", "n odd: sum H(2n-2r^2) = (4+chi(n))/6 s(n,chi) + (1/2) sum_{N(a)=4n}(|b|-a)"},
    Entry{IdentityId::cor5iii, "cor5iii", "n odd: sum H(n-2r^2) = (2+chi(n))/6 s(n,chi) + (1/2) sum_{N(a)=2n}(|b|-a)"},
    Entry{IdentityId::eichler4n, "eichler4n", "sum H(4n-r^2) = 2s(n) - 2l1(n)"},
    Entry{IdentityId::eichler_odd, "eichler_odd", "n odd: sum H(n-r^2) = s(n)/3 - l1(n)"},
    Entry{IdentityId::jacobi, "jacobi", "sum r3(n-r^2) = 8s(n) - 32s(n/4)"},
    Entry{IdentityId::jacobi_alt, "jacobi_alt", "n odd: sum (-1)^r r3(n-r^2) = (-1)^((n-1)/2) 4s(n)"},
    Entry{IdentityId::lemma7, "lemma7",
          "(0,0,1/2) component of the weight 3/2 series for 2x^2-2y^2+z^2 is -4 sum_{m=7 (8)} H(m) q^(m/4)"},
    Entry{IdentityId::lemma9i, "lemma9i", "q^(n/2) coefficient of the (0,0,1/2) component = -r(2n; 4a^2+b^2+c^2)/2"},
    Entry{IdentityId::lemma9ii, "lemma9ii", "q^(n/8) coefficient of the (0,0,1/4) component = -r(n; 4a^2+2b^2+c^2)/2"},
    Entry{IdentityId::remark6_theta, "remark6_theta", "theta(diag(2,2,2)) - theta(diag(4,4,2)) = 2 sum_{n=1,2 (4)} a2(n) q^n"},
    Entry{IdentityId::remark10_eta, "remark10_eta", "eta(2t)^3 eta(4t) eta(8t)^2 / eta(t)^2 = sum s(n,chi) q^n"},
    Entry{IdentityId::remark10_repsums, "remark10_repsums",
          "sum_{r odd} rA(4n-2r^2) = 8s(n,chi) and sum_{r odd} rB(8n-r^2) = 16s(n,chi)"},
    Entry{IdentityId::e2A_quasimodular, "e2A_quasimodular",
          "(2/3)E2(2t) + (2/3)E2(4t) - (1/3)E2(2t+1/2) - 4 sum s(2n+1)q^(2n+1) has the piecewise divisor coefficients"},
    Entry{IdentityId::e2B_series, "e2B_series", "sum (-1)^r r3(4n-2r^2) = -8s(n,chi)(2+chi(m)/2^(v+2))"},
    Entry{IdentityId::inert_primes, "inert_primes",
          "p = 3,5 (8): sum H(4p-2r^2) = 7(p-1)/6, sum H(2p-2r^2) = (p-1)/2, sum H(p-2r^2) = (p-1)/6"},
    Entry{IdentityId::example12, "example12", "n = 7: 24 = 48 - 12 - 12 with ideals (4 +- sqrt2) of norm 14"},
    Entry{IdentityId::remark13, "remark13", "p = 3,5 (8): sum |a2(p-2r^2)| = 2(p-1)"},
    Entry{IdentityId::prop1_series, "prop1_series", "1 - sum |a2(n)| q^n by enumeration against the r3/H closed form"},
    Entry{IdentityId::eq2_limits, "eq2_limits",
          "2-adic local factors at n = 0: 2 on the origin and the (1/2,1/2,0) class, 1 on other cosets"},
};

const Entry& entry(IdentityId id) {
  for (const Entry& e : kCatalogue) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown identity id");
}

// ---------------------------------------------------------------------------
// Small helpers.

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// sum over r in Z of f(base - k r^2), restricted to odd r when odd_only.
template <class F>
Rational sum_over_r(std::int64_t base, std::int64_t k, bool odd_only, F&& f) {
  Rational s;
  for (std::int64_t r = odd_only ? 1 : 0; k * r * r <= base; r += odd_only ? 2 : 1) {
    const Rational v = f(base - k * r * r, r);
    s += r == 0 ? v : v * Rational(2);
  }
  return s;
}

// (-1)^r is even in r, so the symmetric fold above is still valid.
std::int64_t sign_of_r(std::int64_t r) { return r % 2 == 0 ? 1 : -1; }

Rational two_adic_factor(std::int64_t n, unsigned extra) {
  // 2 + chi(m) / 2^(nu + extra), n = 2^nu m.
  const auto [nu, m] = arith::split2(static_cast<std::uint64_t>(n));
  return Rational(2) + Rational(arith::chi8(static_cast<std::int64_t>(m)), std::int64_t{1} << (nu + extra));
}

bool is_square(std::int64_t n) { return n >= 0 && arith::is_square(static_cast<std::uint64_t>(n)); }

// sum_{r^2 - 4n = square} (|r| - sqrt(r^2 - 4n)), by direct search over r.
Rational bridge_direct(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t r = 0; r <= n + 1; ++r) {
    const std::int64_t d = r * r - 4 * n;
    if (d < 0) continue;
    const auto root = arith::square_root(static_cast<std::uint64_t>(d));
    if (!root) continue;
    const std::int64_t term = r - static_cast<std::int64_t>(*root);
    s += r == 0 ? term : 2 * term;
  }
  return Rational(s);
}

bool inert_prime(std::int64_t p) {
  return p > 2 && arith::is_prime(static_cast<std::uint64_t>(p)) && arith::chi8(p) == -1;
}

// ---------------------------------------------------------------------------
// Series built once per check.

class Series {
 public:
  Series(const Context& ctx, std::int64_t order) : ctx_(ctx), order_(std::max<std::int64_t>(order, 0)) {}

  const QSeries& theta_difference() {
    if (!theta_diff_) {
      const auto t = qseries::trunc_for_order(order_);
      const GramForm b1 = GramForm::diagonal({2, 2, 2});
      const GramForm b2 = GramForm::diagonal({4, 4, 2});
      theta_diff_ = qseries::theta_coset(b1, CosetVector::zero(b1), t) - qseries::theta_coset(b2, CosetVector::zero(b2), t);
    }
    return *theta_diff_;
  }

  const QSeries& eta() {
    if (!eta_) {
      const std::array<qseries::EtaFactor, 4> f{{{2, 3}, {4, 1}, {8, 2}, {1, -2}}};
      eta_ = qseries::eta_quotient(f, qseries::trunc_for_order(order_));
    }
    return *eta_;
  }

  const QSeries& e2a() {
    if (!e2a_) {
      const auto t = qseries::trunc_for_order(order_);
      const QSeries e2 = qseries::e2_level1(t);
      const QSeries e2_2 = qseries::rescale_exponents(e2, 2).truncated(t);
      const QSeries e2_4 = qseries::rescale_exponents(e2, 4).truncated(t);
      // E2(2 tau + 1/2): twist q -> -q, then tau -> 2 tau.
      const QSeries e2_half = qseries::rescale_exponents(qseries::alternate_signs(e2), 2).truncated(t);
      QSeries odd(t);
      for (std::int64_t n = 1; n <= order_; n += 2) odd.set(static_cast<std::size_t>(qseries::kGrid * n), Rational(-4 * arith::sigma1(n)));
      e2a_ = Rational(2, 3) * e2_2 + Rational(2, 3) * e2_4 - Rational(1, 3) * e2_half + odd;
    }
    return *e2a_;
  }

  // theta of 4a^2 + b^2 + c^2 (Gram diag(8,2,2)) to order 2 * order_.
  const QSeries& theta_a() {
    if (!theta_a_) {
      const GramForm f = GramForm::diagonal({8, 2, 2});
      theta_a_ = qseries::theta_coset(f, CosetVector::zero(f), qseries::trunc_for_order(2 * order_));
    }
    return *theta_a_;
  }

  // theta of 4a^2 + 2b^2 + c^2 (Gram diag(8,4,2)).
  const QSeries& theta_b() {
    if (!theta_b_) {
      const GramForm f = GramForm::diagonal({8, 4, 2});
      theta_b_ = qseries::theta_coset(f, CosetVector::zero(f), qseries::trunc_for_order(order_));
    }
    return *theta_b_;
  }

  const Context& ctx() const { return ctx_; }

 private:
  const Context& ctx_;
  std::int64_t order_;
  std::optional<QSeries> theta_diff_, eta_, e2a_, theta_a_, theta_b_;
};

// Local factors for the (0,0,1/2) component argument m/4.
Rational lemma7_lhs(const Context& ctx, std::int64_t m) {
  const GramForm qt = GramForm::diagonal({4, -4, 2});
  const GramForm x2 = GramForm::diagonal({2});
  const Rational arg(m, 4);
  const auto ft = localcount::local_factor(qt, CosetVector(qt, {0, 0, Rational(1, 2)}), arg, 2, 6);
  const auto fx = localcount::local_factor(x2, CosetVector(x2, {Rational(1, 2)}), arg, 2, 8);
  // Discriminant groups differ by a factor 16, hence 1/sqrt(16).
  return Rational(1, 4) * (ft.value / fx.value) * Rational(-12) * ctx.hurwitz()(m);
}

// ---------------------------------------------------------------------------
// Main rows.

Rational prop2_alpha(const Context& ctx, std::int64_t n) {
  const auto& a2 = ctx.alpha2();
  const auto& h = ctx.hurwitz();
  Rational v = sum_over_r(n, 1, false, [&](std::int64_t k, std::int64_t) { return Rational(a2.abs(k)); });
  if (n % 2 == 0) v += Rational(4) * sum_over_r(4 * n, 1, true, [&](std::int64_t k, std::int64_t) { return h(k); });
  v += Rational(8) * ctx.divisors().lambda1(static_cast<std::uint64_t>(n));
  if (is_square(n)) v -= Rational(4);
  return v;
}

Rational prop2_rhs(const Context& ctx, std::int64_t n) {
  const auto& d = ctx.divisors();
  const auto un = static_cast<std::uint64_t>(n);
  if (n % 2 == 1) return Rational(4 * d.sigma1(un));
  if (n % 4 == 2) return Rational(24 * d.sigma1_frac(un, 2));
  return Rational(8 * d.sigma1_frac(un, 2) + 16 * d.sigma1_frac(un, 4));
}

Rational e2a_closed(const Context& ctx, std::int64_t n) {
  if (n == 0) return Rational(1);
  return -prop2_rhs(ctx, n);
}

Rational prop4_rhs(const Context& ctx, std::int64_t n) {
  const Rational main = Rational(2 * ctx.divisors().sigma1_chi(static_cast<std::uint64_t>(n))) * two_adic_factor(n, 0);
  Rational v = main + Rational(4 * zsqrt2::correction_sum(static_cast<std::uint64_t>(2 * n)));
  if (is_square(2 * n)) v += Rational(4);
  return v;
}

Rational abs_alpha2_sum_2r2(const Context& ctx, std::int64_t n) {
  const auto& a2 = ctx.alpha2();
  return sum_over_r(n, 2, false, [&](std::int64_t k, std::int64_t) { return Rational(a2.abs(k)); });
}

Rational hurwitz_sum_2r2(const Context& ctx, std::int64_t base) {
  const auto& h = ctx.hurwitz();
  return sum_over_r(base, 2, false, [&](std::int64_t k, std::int64_t) { return h(k); });
}

Rational alt_r3_sum_2r2(const Context& ctx, std::int64_t base) {
  const auto& r3 = ctx.r3();
  return sum_over_r(base, 2, false, [&](std::int64_t k, std::int64_t r) { return Rational(sign_of_r(r) * r3(k)); });
}

Rational sigma_chi(const Context& ctx, std::int64_t n) {
  return Rational(ctx.divisors().sigma1_chi(static_cast<std::uint64_t>(n)));
}

Rational main_lhs(const Context& ctx, Series& series, IdentityId id, std::int64_t n) {
  const auto& h = [&]() -> const classnum::HurwitzTable& { return ctx.hurwitz(); };
  switch (id) {
    case IdentityId::prop2: return prop2_alpha(ctx, n);
    case IdentityId::cor3:
      return sum_over_r(4 * n, 1, true, [&](std::int64_t k, std::int64_t) { return h()(k); });
    case IdentityId::prop4:
    case IdentityId::remark13:
    case IdentityId::example12: return abs_alpha2_sum_2r2(ctx, n);
    case IdentityId::cor5i: return hurwitz_sum_2r2(ctx, 4 * n);
    case IdentityId::cor5ii: return hurwitz_sum_2r2(ctx, 2 * n);
    case IdentityId::cor5iii: return hurwitz_sum_2r2(ctx, n);
    case IdentityId::inert_primes: return hurwitz_sum_2r2(ctx, 4 * n);
    case IdentityId::eichler4n:
      return sum_over_r(4 * n, 1, false, [&](std::int64_t k, std::int64_t) { return h()(k); });
    case IdentityId::eichler_odd:
      return sum_over_r(n, 1, false, [&](std::int64_t k, std::int64_t) { return h()(k); });
    case IdentityId::jacobi:
      return sum_over_r(n, 1, false, [&](std::int64_t k, std::int64_t) { return Rational(ctx.r3()(k)); });
    case IdentityId::jacobi_alt:
      return sum_over_r(n, 1, false,
                        [&](std::int64_t k, std::int64_t r) { return Rational(sign_of_r(r) * ctx.r3()(k)); });
    case IdentityId::lemma7: return lemma7_lhs(ctx, n);
    case IdentityId::lemma9i: return Rational(-1, 2) * series.theta_a().coeff_q(2 * n);
    case IdentityId::lemma9ii: return Rational(-1, 2) * series.theta_b().coeff_q(n);
    case IdentityId::remark6_theta: return series.theta_difference().coeff_q(n);
    case IdentityId::remark10_eta: return series.eta().coeff_q(n);
    case IdentityId::remark10_repsums:
      return sum_over_r(4 * n, 2, true, [&](std::int64_t k, std::int64_t) { return Rational(ctx.rep_a()(k)); });
    case IdentityId::e2A_quasimodular: return series.e2a().coeff_q(n);
    case IdentityId::e2B_series: return alt_r3_sum_2r2(ctx, 4 * n);
    case IdentityId::prop1_series: {
      const auto brute = ctx.alpha2_brute();
      if (n >= static_cast<std::int64_t>(brute.size())) {
        throw FeasibilityError("prop1_series: n = " + std::to_string(n) + " above the brute-force ceiling");
      }
      return n == 0 ? Rational(1) : Rational(-abs64(brute[static_cast<std::size_t>(n)]));
    }
    case IdentityId::eq2_limits: break;
  }
  throw DomainError(std::string(identity_name(id)) + " has no single main row");
}

Rational main_rhs(const Context& ctx, IdentityId id, std::int64_t n) {
  const auto& d = [&]() -> const arith::DivisorTable& { return ctx.divisors(); };
  const auto un = static_cast<std::uint64_t>(n);
  switch (id) {
    case IdentityId::prop2: return prop2_rhs(ctx, n);
    case IdentityId::cor3: {
      if (n % 2 == 1) return Rational(2, 3) * Rational(d().sigma1(un));
      if (n % 4 == 2) return Rational(4 * d().sigma1_frac(un, 2)) - Rational(2) * d().lambda1(un);
      return Rational(2, 3) * Rational(d().sigma1(un)) + Rational(2 * d().sigma1_frac(un, 2)) -
             Rational(8, 3) * Rational(d().sigma1_frac(un, 4)) + Rational(4) * d().lambda1(un / 4) -
             Rational(2) * d().lambda1(un);
    }
    case IdentityId::prop4:
    case IdentityId::example12: return prop4_rhs(ctx, n);
    case IdentityId::cor5i:
      return Rational(2, 3) * sigma_chi(ctx, n) * two_adic_factor(n, 2) +
             Rational(zsqrt2::correction_sum(8 * un), 2);
    case IdentityId::cor5ii:
      return Rational(4 + arith::chi8(n), 6) * sigma_chi(ctx, n) + Rational(zsqrt2::correction_sum(4 * un), 2);
    case IdentityId::cor5iii:
      return Rational(2 + arith::chi8(n), 6) * sigma_chi(ctx, n) + Rational(zsqrt2::correction_sum(2 * un), 2);
    case IdentityId::inert_primes: return Rational(7 * (n - 1), 6);
    case IdentityId::remark13: return Rational(2 * (n - 1));
    case IdentityId::eichler4n: return Rational(2 * d().sigma1(un)) - Rational(2) * d().lambda1(un);
    case IdentityId::eichler_odd: return Rational(d().sigma1(un), 3) - d().lambda1(un);
    case IdentityId::jacobi: return Rational(8 * d().sigma1(un) - 32 * d().sigma1_frac(un, 4));
    case IdentityId::jacobi_alt: return Rational(((n - 1) / 2) % 2 == 0 ? 4 * d().sigma1(un) : -4 * d().sigma1(un));
    case IdentityId::lemma7: return n % 8 == 7 ? Rational(-4) * ctx.hurwitz()(n) : Rational();
    case IdentityId::lemma9i: return Rational(-ctx.rep_a()(2 * n), 2);
    case IdentityId::lemma9ii: return Rational(-ctx.rep_b()(n), 2);
    case IdentityId::remark6_theta: {
      const std::int64_t r = n % 4;
      return (r == 1 || r == 2) ? Rational(2 * ctx.alpha2()(n)) : Rational();
    }
    case IdentityId::remark10_eta: return sigma_chi(ctx, n);
    case IdentityId::remark10_repsums: return Rational(8) * sigma_chi(ctx, n);
    case IdentityId::e2A_quasimodular: return e2a_closed(ctx, n);
    case IdentityId::e2B_series:
      return n == 0 ? Rational(1) : Rational(-8) * sigma_chi(ctx, n) * two_adic_factor(n, 2);
    case IdentityId::prop1_series: return n == 0 ? Rational(1) : Rational(-ctx.alpha2().abs(n));
    case IdentityId::eq2_limits: break;
  }
  throw DomainError(std::string(identity_name(id)) + " has no single main row");
}

void require_domain(const Context& ctx, IdentityId id, std::int64_t n) {
  if (!in_domain(ctx, id, n)) {
    throw DomainError(std::string(identity_name(id)) + ": n = " + std::to_string(n) + " is outside the domain");
  }
}

// ---------------------------------------------------------------------------
// Extra rows.

void add_printed(CheckResult& out, IdentityId id, std::int64_t n, const Rational& computed, std::int64_t printed) {
  out.reports.push_back(make_report(id, n, computed, Rational(printed), "printed"));
}

// Tabulated listing whose mismatches are recorded rather than failed.
void cross_check_listing(CheckResult& out, IdentityId id, std::int64_t n, const Rational& computed,
                         std::int64_t printed, const std::string& what) {
  if (computed == Rational(printed)) return;
  Discrepancy d{id, n, what, Rational(printed), computed, {}};
  std::ostringstream os;
  os << "listed coefficient of q^" << n << " is " << printed << ", enumeration gives " << computed;
  d.detail = os.str();
  out.discrepancies.push_back(std::move(d));
}

std::string coset_label(std::string_view form, const std::vector<Rational>& g) {
  std::ostringstream os;
  os << form << " (";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    if (g[i].is_integer()) {
      os << g[i].num();
    } else {
      os << g[i].num() << "/" << g[i].den();
    }
  }
  os << ")";
  return os.str();
}

// Limit values and series comparison for the n = 0 local factors.
CheckResult check_local_limits() {
  CheckResult out;
  constexpr unsigned kNuMax = 8;
  struct FormCase {
    std::string_view name;
    GramForm form;
    std::vector<Rational> special;  // the (1/2,1/2,0) class in this form's coordinates
  };
  const std::vector<FormCase> forms{
      {"2x^2-y^2+2z^2", GramForm::diagonal({4, -2, 4}), {Rational(1, 2), 0, Rational(1, 2)}},
      {"2x^2+2y^2-z^2", GramForm::diagonal({4, 4, -2}), {Rational(1, 2), Rational(1, 2), 0}},
      {"2x^2-2y^2+z^2", GramForm::diagonal({4, -4, 2}), {Rational(1, 2), Rational(1, 2), 0}},
  };
  const auto origin_series = localcount::tabulated_local_series(localcount::ShadowCase::origin, kNuMax + 3);
  const auto special_series = localcount::tabulated_local_series(localcount::ShadowCase::special, kNuMax + 1);
  const auto generic_series = localcount::tabulated_local_series(localcount::ShadowCase::generic, kNuMax + 1);
  std::vector<std::string> origin_mismatch;
  std::optional<std::pair<Rational, Rational>> origin_first;

  for (const FormCase& fc : forms) {
    // Grid S^{-1} Z^3 / Z^3 for a diagonal Gram matrix.
    std::array<std::int64_t, 3> den{};
    for (std::size_t i = 0; i < 3; ++i) den[i] = abs64(fc.form(i, i));
    for (std::int64_t i = 0; i < den[0]; ++i) {
      for (std::int64_t j = 0; j < den[1]; ++j) {
        for (std::int64_t k = 0; k < den[2]; ++k) {
          std::vector<Rational> g{Rational(i, den[0]), Rational(j, den[1]), Rational(k, den[2])};
          const std::string label = coset_label(fc.name, g);
          const CosetVector gamma(fc.form, g);
          const Rational qg = fc.form.value(std::span<const Rational>(g));
          if (!qg.is_integer()) {
            if (g == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0}) {
              out.notes.push_back(label + " excluded: Q(gamma) = " + qg.str() + " is not an integer at n = 0");
            }
            continue;
          }
          const bool origin = i == 0 && j == 0 && k == 0;
          const bool special = g == fc.special;
          const auto lf = localcount::local_factor(fc.form, gamma, Rational(), 2, kNuMax);
          out.reports.push_back(make_report(IdentityId::eq2_limits, 0, lf.value, Rational(origin || special ? 2 : 1), label));
          const auto counts = localcount::count_sequence(fc.form, gamma, Rational(), 2, kNuMax);
          if (origin) {
            for (unsigned nu = 0; nu <= kNuMax; ++nu) {
              const Rational got(static_cast<std::int64_t>(counts[nu]));
              const Rational want = origin_series.at(static_cast<int>(nu));
              if (want != got) {
                origin_mismatch.push_back(std::string(fc.name));
                if (!origin_first) origin_first = {want, got};
                break;
              }
            }
            continue;
          }
          const auto& series = special ? special_series : generic_series;
          for (unsigned nu = 0; nu <= kNuMax; ++nu) {
            out.reports.push_back(make_report(IdentityId::eq2_limits, nu, Rational(static_cast<std::int64_t>(counts[nu])),
                                              series.at(static_cast<int>(nu)), label + " series"));
          }
        }
      }
    }
  }
  if (!origin_mismatch.empty()) {
    std::ostringstream os;
    os << "tabulated closed form for gamma = 0 expands as t^" << origin_series.valuation << " * (";
    for (int k = 0; k < 4; ++k) os << (k ? ", " : "") << origin_series.coeffs[static_cast<std::size_t>(k)];
    os << ", ...) in t = 2^-s, while the defining series starts 1 + 0 t + ...; mismatch for forms";
    for (const auto& f : origin_mismatch) os << " " << f;
    os << "; the limit values from the counts are still checked above";
    out.discrepancies.push_back(Discrepancy{IdentityId::eq2_limits, 0, "gamma = 0 closed-form series",
                                            origin_first->first, origin_first->second, os.str()});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const Entry& e : kCatalogue) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) { return entry(id).name; }
std::string_view identity_statement(IdentityId id) { return entry(id).statement; }

IdentityId parse_identity(std::string_view name) {
  for (const Entry& e : kCatalogue) {
    if (e.name == name) return e.id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

bool has_fixed_domain(IdentityId id) { return id == IdentityId::example12 || id == IdentityId::eq2_limits; }

Range default_range(IdentityId id, std::int64_t brute_ceiling) {
  switch (id) {
    case IdentityId::prop2:
    case IdentityId::cor3:
    case IdentityId::eichler4n:
    case IdentityId::eichler_odd:
    case IdentityId::jacobi:
    case IdentityId::jacobi_alt: return {1, 10000};
    case IdentityId::prop4:
    case IdentityId::cor5i:
    case IdentityId::cor5ii:
    case IdentityId::cor5iii: return {1, 5000};
    case IdentityId::lemma7: return {3, 255};
    case IdentityId::lemma9i:
    case IdentityId::lemma9ii: return {1, 2000};
    case IdentityId::remark6_theta: return {0, 1000};
    case IdentityId::remark10_eta:
    case IdentityId::remark10_repsums: return {1, 2000};
    case IdentityId::e2A_quasimodular:
    case IdentityId::e2B_series: return {0, 2000};
    case IdentityId::inert_primes:
    case IdentityId::remark13: return {2, 999};
    case IdentityId::example12: return {7, 7};
    case IdentityId::prop1_series: return {0, brute_ceiling};
    case IdentityId::eq2_limits: return {0, 0};
  }
  return {0, 0};
}

std::int64_t range_cap(IdentityId id, std::int64_t brute_ceiling) {
  switch (id) {
    case IdentityId::lemma7: return 1023;
    case IdentityId::remark6_theta:
    case IdentityId::remark10_eta:
    case IdentityId::remark10_repsums:
    case IdentityId::e2A_quasimodular:
    case IdentityId::e2B_series:
    case IdentityId::lemma9i:
    case IdentityId::lemma9ii: return 20000;
    case IdentityId::prop1_series: return brute_ceiling;
    case IdentityId::example12: return 7;
    case IdentityId::eq2_limits: return 0;
    default: return 100000;
  }
}

IdentityReport make_report(IdentityId id, std::int64_t n, const Rational& lhs, const Rational& rhs, std::string label) {
  const Rational residual = lhs - rhs;
  return IdentityReport{id, n, lhs, rhs, residual, residual.is_zero(), std::move(label)};
}

void CheckResult::append(CheckResult&& other) {
  reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()), std::make_move_iterator(other.reports.end()));
  discrepancies.insert(discrepancies.end(), std::make_move_iterator(other.discrepancies.begin()),
                       std::make_move_iterator(other.discrepancies.end()));
  notes.insert(notes.end(), std::make_move_iterator(other.notes.begin()), std::make_move_iterator(other.notes.end()));
}

std::size_t CheckResult::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return !r.pass; }));
}

bool in_domain(const Context& ctx, IdentityId id, std::int64_t n) {
  switch (id) {
    case IdentityId::cor5ii:
    case IdentityId::cor5iii:
    case IdentityId::eichler_odd:
    case IdentityId::jacobi_alt:
    case IdentityId::lemma9i: return n >= 1 && n % 2 == 1;
    case IdentityId::lemma7: return n >= 3 && n % 4 == 3;
    case IdentityId::lemma9ii: return n >= 7 && n % 8 == 7;
    case IdentityId::remark6_theta:
    case IdentityId::e2A_quasimodular:
    case IdentityId::e2B_series: return n >= 0;
    case IdentityId::inert_primes:
    case IdentityId::remark13: return inert_prime(n);
    case IdentityId::example12: return n == 7;
    case IdentityId::prop1_series: return n >= 0 && n <= ctx.brute_ceiling();
    case IdentityId::eq2_limits: return false;
    default: return n >= 1;
  }
}

Rational closed_form(const Context& ctx, IdentityId id, std::int64_t n) {
  require_domain(ctx, id, n);
  return main_rhs(ctx, id, n);
}

Rational lhs_value(const Context& ctx, IdentityId id, std::int64_t n) {
  require_domain(ctx, id, n);
  Series series(ctx, n);
  return main_lhs(ctx, series, id, n);
}

CheckResult check_identity(const Context& ctx, IdentityId id, Range range) {
  CheckResult out;
  if (id == IdentityId::eq2_limits) return check_local_limits();
  if (has_fixed_domain(id)) range = default_range(id, ctx.brute_ceiling());
  Series series(ctx, range.hi);
  for (std::int64_t n = std::max<std::int64_t>(range.lo, 0); n <= range.hi; ++n) {
    if (!in_domain(ctx, id, n)) continue;
    out.reports.push_back(make_report(id, n, main_lhs(ctx, series, id, n), main_rhs(ctx, id, n)));

    switch (id) {
      case IdentityId::prop2: {
        // The unassembled form with the direct divisor-pair sum, and the
        // bridge between the two.
        const Rational bridge = bridge_direct(n);
        const auto& a2 = ctx.alpha2();
        Rational lemma = sum_over_r(n, 1, false, [&](std::int64_t k, std::int64_t) { return Rational(a2.abs(k)); });
        if (n % 2 == 0) {
          lemma += Rational(4) * sum_over_r(4 * n, 1, true, [&](std::int64_t k, std::int64_t) { return ctx.hurwitz()(k); });
        }
        lemma += Rational(2) * bridge;
        if (const auto root = arith::square_root(static_cast<std::uint64_t>(n))) {
          lemma -= Rational(4 * (static_cast<std::int64_t>(*root) + 1));
        }
        out.reports.push_back(make_report(id, n, lemma, prop2_rhs(ctx, n), "unassembled"));
        Rational bridge_rhs(ctx.divisors().min_divisor_sum(static_cast<std::uint64_t>(n)) * 2);
        if (const auto root = arith::square_root(static_cast<std::uint64_t>(n))) {
          bridge_rhs += Rational(2 * static_cast<std::int64_t>(*root));
        }
        out.reports.push_back(make_report(id, n, bridge, bridge_rhs, "bridge"));
        break;
      }
      case IdentityId::cor5ii: {
        const Rational want = Rational(8 + 2 * arith::chi8(n)) * sigma_chi(ctx, n);
        out.reports.push_back(make_report(id, n, alt_r3_sum_2r2(ctx, 2 * n), want, "alt_r3"));
        break;
      }
      case IdentityId::cor5iii: {
        static constexpr std::array<std::int64_t, 8> kFactor{0, 6, 0, -2, 0, 2, 0, -6};
        const Rational want = Rational(kFactor[static_cast<std::size_t>(n % 8)]) * sigma_chi(ctx, n);
        out.reports.push_back(make_report(id, n, alt_r3_sum_2r2(ctx, n), want, "alt_r3"));
        break;
      }
      case IdentityId::inert_primes:
        out.reports.push_back(make_report(id, n, hurwitz_sum_2r2(ctx, 2 * n), Rational(n - 1, 2), "2p"));
        out.reports.push_back(make_report(id, n, hurwitz_sum_2r2(ctx, n), Rational(n - 1, 6), "p"));
        break;
      case IdentityId::remark10_repsums: {
        const Rational rb =
            sum_over_r(8 * n, 1, true, [&](std::int64_t k, std::int64_t) { return Rational(ctx.rep_b()(k)); });
        out.reports.push_back(make_report(id, n, rb, Rational(16) * sigma_chi(ctx, n), "rB"));
        break;
      }
      case IdentityId::e2A_quasimodular:
        if (n >= 1) out.reports.push_back(make_report(id, n, -prop2_alpha(ctx, n), series.e2a().coeff_q(n), "prop2_alpha"));
        break;
      case IdentityId::example12: {
        out.reports.push_back(make_report(id, n, main_rhs(ctx, id, n), Rational(24), "printed rhs"));
        out.reports.push_back(make_report(id, n, main_lhs(ctx, series, id, n), Rational(24), "printed lhs"));
        const Rational lead = Rational(2 * ctx.divisors().sigma1_chi(7)) * Rational(2 + arith::chi8(7));
        out.reports.push_back(make_report(id, n, lead, Rational(48), "divisor term"));
        const auto ideals = zsqrt2::ideals_of_norm(14);
        out.reports.push_back(make_report(id, n, Rational(static_cast<std::int64_t>(ideals.size())), Rational(2), "ideal count"));
        for (const auto& r : ideals) {
          const std::string g = "(" + std::to_string(r.a) + (r.b < 0 ? "-" : "+") + std::to_string(abs64(r.b)) + "sqrt2)";
          out.reports.push_back(make_report(id, n, Rational(r.a), Rational(4), "trace/2 of " + g));
          out.reports.push_back(make_report(id, n, Rational(4 * (abs64(r.b) - r.a)), Rational(-12), "term of " + g));
        }
        break;
      }
      default: break;
    }
  }

  // Tabulated leading coefficients.
  auto printed = [&](std::int64_t n, std::int64_t value) {
    if (n >= range.lo && n <= range.hi && in_domain(ctx, id, n)) add_printed(out, id, n, main_lhs(ctx, series, id, n), value);
  };
  switch (id) {
    case IdentityId::lemma7: {
      const std::array<std::int64_t, 4> m{7, 15, 23, 31}, v{-4, -8, -12, -12};
      for (std::size_t i = 0; i < m.size(); ++i) printed(m[i], v[i]);
      break;
    }
    case IdentityId::lemma9i: {
      const std::array<std::int64_t, 5> m{1, 3, 5, 7, 9}, v{-2, -4, -4, -8, -6};
      for (std::size_t i = 0; i < m.size(); ++i) printed(m[i], v[i]);
      break;
    }
    case IdentityId::lemma9ii: {
      const std::array<std::int64_t, 5> m{7, 15, 23, 31, 39}, v{-4, -4, -4, -8, -4};
      for (std::size_t i = 0; i < m.size(); ++i) printed(m[i], v[i]);
      break;
    }
    case IdentityId::remark6_theta: {
      const std::array<std::int64_t, 4> m{1, 2, 5, 6}, v{4, 8, 16, 16};
      for (std::size_t i = 0; i < m.size(); ++i) printed(m[i], v[i]);
      break;
    }
    case IdentityId::remark10_eta: {
      const std::array<std::int64_t, 4> v{8, 16, 16, 32};
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i + 1);
        if (n >= range.lo && n <= range.hi) add_printed(out, id, n, Rational(8) * series.eta().coeff_q(n), v[i]);
      }
      break;
    }
    case IdentityId::remark10_repsums: {
      const std::array<std::int64_t, 4> v{8, 16, 16, 32};
      for (std::size_t i = 0; i < v.size(); ++i) printed(static_cast<std::int64_t>(i + 1), v[i]);
      break;
    }
    case IdentityId::e2A_quasimodular: {
      const std::array<std::int64_t, 6> v{1, -4, -24, -16, -40, -24};
      for (std::size_t i = 0; i < v.size(); ++i) printed(static_cast<std::int64_t>(i), v[i]);
      break;
    }
    case IdentityId::e2B_series: {
      const std::array<std::int64_t, 7> v{1, -18, -34, -28, -66, -56, -60};
      for (std::size_t i = 0; i < v.size(); ++i) printed(static_cast<std::int64_t>(i), v[i]);
      break;
    }
    case IdentityId::prop1_series: {
      const std::array<std::int64_t, 7> listing{1, -2, -4, 0, -2, -8, -8};
      for (std::size_t i = 0; i < listing.size(); ++i) printed(static_cast<std::int64_t>(i), listing[i]);
      // Listing of the (0,0,0) component of the weight 3/2 series for
      // 2x^2 - y^2 + 2z^2, which should be the same series.
      const std::array<std::int64_t, 6> component{1, -2, -4, 0, -4, -8};
      for (std::size_t i = 0; i < component.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i);
        if (n < range.lo || n > range.hi || !in_domain(ctx, id, n)) continue;
        cross_check_listing(out, id, n, main_lhs(ctx, series, id, n), component[i], "(0,0,0)-component listing");
      }
      break;
    }
    default: break;
  }
  if (id == IdentityId::remark6_theta || id == IdentityId::prop1_series) {
    out.notes.push_back(std::string(identity_name(id)) + ": finite coefficient comparison to order " +
                        std::to_string(range.hi) + ", not a proof of the modular identity");
  }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const IdentityReport& a, const IdentityReport& b) { return a.n < b.n; });
  return out;
}

Range effective_range(const SuiteRequest& req, IdentityId id) {
  Range r = default_range(id, req.brute_ceiling);
  if (has_fixed_domain(id)) return r;
  if (req.min) r.lo = *req.min;
  if (req.max) r.hi = *req.max;
  if (r.lo > r.hi) throw std::invalid_argument("empty range: --min above --max");
  const std::int64_t cap = range_cap(id, req.brute_ceiling);
  if (r.hi > cap) {
    throw FeasibilityError(std::string(identity_name(id)) + ": max " + std::to_string(r.hi) + " exceeds the cap " +
                           std::to_string(cap));
  }
  return r;
}

CheckResult run_suite(const SuiteRequest& req) {
  std::vector<std::pair<IdentityId, Range>> jobs;
  Limits limits;
  for (IdentityId id : req.ids) {
    const Range r = effective_range(req, id);
    jobs.emplace_back(id, r);
    limits.widen(limits_for(id, r.hi));
  }
  const Context ctx(limits, req.brute_ceiling);
  CheckResult all;
  if (jobs.empty()) return all;

  unsigned workers = req.workers ? req.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  std::vector<CheckResult> results(jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = check_identity(ctx, jobs[i].first, jobs[i].second);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = check_identity(ctx, jobs[i].first, jobs[i].second);
    };
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  for (auto& r : results) all.append(std::move(r));
  return all;
}

int exit_status(const CheckResult& result) { return result.failures() == 0 ? 0 : 1; }

}  // namespace m2v::verify

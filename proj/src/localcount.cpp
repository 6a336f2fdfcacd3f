#include "m2v/localcount.hpp"

#include <string>

#include "m2v/simd/kernels.hpp"

namespace m2v::localcount {
namespace {

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) throw OverflowError("prime power overflow");
    r *= p;
  }
  return r;
}

std::uint64_t mod_of(__int128 v, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = v % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

// Solves the square system M x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[k]);
    std::swap(rhs[piv], rhs[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k].is_zero()) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

Rational predict(std::span<const Rational> c, std::size_t idx, const std::vector<Rational>& a, const Rational& b) {
  Rational v = b;
  for (std::size_t i = 1; i <= a.size(); ++i) v += a[i - 1] * c[idx - i];
  return v;
}

}  // namespace

std::uint64_t count_congruence(const GramForm& form, const CosetVector& gamma, const Rational& n, std::uint64_t p,
                               unsigned nu, std::uint64_t ceiling) {
  const std::size_t e = form.dim();
  if (gamma.dim() != e) throw std::invalid_argument("count_congruence: dimension mismatch");
  if (p < 2) throw DomainError("count_congruence: p must be prime");
  const Rational shift = form.value(std::span<const Rational>(gamma.components())) + n;
  if (!shift.is_integer()) {
    throw DomainError("count_congruence: n + Q(gamma) = " + shift.str() + " is not an integer");
  }
  if (nu == 0) return 1;
  const std::uint64_t modulus = ipow(p, nu);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (points > ceiling / modulus) {
      throw FeasibilityError("count_congruence: p^(nu*e) = " + std::to_string(p) + "^" + std::to_string(nu * e) +
                             " exceeds the ceiling " + std::to_string(ceiling));
    }
    points *= modulus;
  }
  if (modulus > (std::uint64_t{1} << 31)) throw FeasibilityError("count_congruence: modulus above 2^31");

  // Q(v - gamma) + n = Q(v) - v.(S gamma) + shift; the last coordinate is
  // handled by the root-count kernel.
  const std::vector<std::int64_t> sg = gamma.image(form);
  const std::size_t last = e - 1;
  const std::uint64_t a2 = mod_of(form(last, last) / 2, modulus);
  std::vector<std::uint64_t> v(last, 0);
  std::uint64_t total = 0;
  for (;;) {
    __int128 a1 = -static_cast<__int128>(sg[last]);
    __int128 a0 = shift.num();
    for (std::size_t i = 0; i < last; ++i) {
      const auto vi = static_cast<__int128>(v[i]);
      a1 += static_cast<__int128>(form(last, i)) * vi;
      a0 += static_cast<__int128>(form(i, i) / 2) * vi * vi - static_cast<__int128>(sg[i]) * vi;
      for (std::size_t j = i + 1; j < last; ++j) a0 += static_cast<__int128>(form(i, j)) * vi * static_cast<__int128>(v[j]);
    }
    total += simd::count_quadratic_roots(a2, mod_of(a1, modulus), mod_of(a0, modulus), modulus);
    std::size_t k = 0;
    while (k < last && ++v[k] == modulus) v[k++] = 0;
    if (k == last) break;
  }
  return total;
}

std::vector<std::uint64_t> count_sequence(const GramForm& form, const CosetVector& gamma, const Rational& n,
                                          std::uint64_t p, unsigned nu_max, std::uint64_t ceiling) {
  std::vector<std::uint64_t> out;
  for (unsigned nu = 0; nu <= nu_max; ++nu) out.push_back(count_congruence(form, gamma, n, p, nu, ceiling));
  return out;
}

std::vector<Rational> density_ratio_sequence(const GramForm& form, const CosetVector& gamma, const Rational& n,
                                             std::uint64_t p, unsigned nu_max, std::uint64_t ceiling) {
  const auto counts = count_sequence(form, gamma, n, p, nu_max, ceiling);
  std::vector<Rational> out;
  const unsigned e = static_cast<unsigned>(form.dim());
  for (unsigned nu = 0; nu <= nu_max; ++nu) {
    out.emplace_back(static_cast<std::int64_t>(counts[nu]), static_cast<std::int64_t>(ipow(p, nu * (e - 1))));
  }
  return out;
}

bool roots_inside_unit_disk(std::span<const Rational> coeffs) {
  std::vector<Rational> p(coeffs.begin(), coeffs.end());
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.empty()) throw DomainError("roots_inside_unit_disk: zero polynomial");
  while (p.size() > 1) {
    const std::size_t d = p.size() - 1;
    if (p[0].abs() >= p[d].abs()) return false;
    // (a_d p(z) - a_0 p*(z)) / z keeps the count of roots inside the disk.
    std::vector<Rational> q(d);
    for (std::size_t k = 0; k < d; ++k) q[k] = p[d] * p[k + 1] - p[0] * p[d - k - 1];
    p = std::move(q);
  }
  return true;
}

std::optional<RecurrenceFit> fit_affine_recurrence(std::span<const Rational> c, unsigned max_order,
                                                   unsigned min_confirm) {
  const std::size_t len = c.size();
  for (unsigned order = 0; order <= max_order; ++order) {
    for (unsigned onset = 0; onset + 2 * order + min_confirm < len; ++onset) {
      // Unknowns a_1..a_L, b; equations at nu = onset..onset + L.
      std::vector<std::vector<Rational>> m;
      std::vector<Rational> rhs;
      for (unsigned r = 0; r <= order; ++r) {
        const std::size_t idx = onset + r + order;
        std::vector<Rational> row;
        for (unsigned i = 1; i <= order; ++i) row.push_back(c[idx - i]);
        row.emplace_back(1);
        m.push_back(std::move(row));
        rhs.push_back(c[idx]);
      }
      const auto sol = solve(std::move(m), std::move(rhs));
      if (!sol) continue;
      std::vector<Rational> a(sol->begin(), sol->begin() + order);
      const Rational b = sol->back();
      bool ok = true;
      for (std::size_t idx = onset + order; idx < len && ok; ++idx) ok = predict(c, idx, a, b) == c[idx];
      if (!ok) continue;
      RecurrenceFit fit;
      fit.order = order;
      fit.onset = onset;
      fit.a = a;
      fit.b = b;
      fit.determined_by = onset + 2 * order;
      fit.confirmations = static_cast<unsigned>(len - 1 - fit.determined_by);
      std::vector<Rational> charpoly(order + 1);
      charpoly[order] = Rational(1);
      for (unsigned i = 1; i <= order; ++i) charpoly[order - i] = -a[i - 1];
      fit.stable = roots_inside_unit_disk(charpoly);
      return fit;
    }
  }
  return std::nullopt;
}

Rational fixed_point(const RecurrenceFit& fit) {
  if (!fit.stable) throw DomainError("fixed_point: recurrence is not stable");
  Rational denom(1);
  for (const Rational& ai : fit.a) denom -= ai;
  return fit.b / denom;
}

Rational series_sum(std::span<const Rational> c, const RecurrenceFit& fit) {
  if (!fit.stable || !fit.b.is_zero()) throw DomainError("series_sum: sequence is not summable");
  Rational head;
  for (unsigned i = 0; i < fit.onset; ++i) head += c[i];
  // Tail generating function P(t) / (1 - sum a_i t^i) evaluated at t = 1.
  Rational num;
  for (unsigned k = 0; k < fit.order; ++k) {
    Rational term = c[fit.onset + k];
    for (unsigned i = 1; i <= k; ++i) term -= fit.a[i - 1] * c[fit.onset + k - i];
    num += term;
  }
  if (fit.order == 0) return head;  // b = 0: the tail vanishes
  Rational denom(1);
  for (const Rational& ai : fit.a) denom -= ai;
  return head + num / denom;
}

LocalFactor local_factor(const GramForm& form, const CosetVector& gamma, const Rational& n, std::uint64_t p,
                         unsigned nu_max, std::uint64_t ceiling) {
  const unsigned e = static_cast<unsigned>(form.dim());
  if (e % 2 == 0) throw DomainError("local_factor: needs odd dimension");
  const auto counts = count_sequence(form, gamma, n, p, nu_max, ceiling);
  LocalFactor lf;
  for (unsigned nu = 0; nu <= nu_max; ++nu) {
    lf.normalized.emplace_back(static_cast<std::int64_t>(counts[nu]), static_cast<std::int64_t>(ipow(p, nu * (e + 1) / 2)));
  }
  for (unsigned nu = 0; nu <= nu_max; ++nu) {
    bool flat = true;
    for (unsigned k = nu; k <= nu_max && flat; ++k) flat = lf.normalized[k] == lf.normalized[nu];
    if (flat && nu + 2 <= nu_max) {
      lf.constant_from = nu;
      break;
    }
  }
  const auto fit = fit_affine_recurrence(lf.normalized);
  if (!fit || !fit->stable) {
    throw ConsistencyError("local_factor: no stable recurrence explains the counts up to nu = " +
                           std::to_string(nu_max));
  }
  lf.fit = *fit;
  if (e == 3) {
    lf.value = fixed_point(lf.fit);
  } else {
    // (1 - p^((e-3)/2)) * sum c_nu; e = 1 gives the factor 1 - 1/p.
    const Rational scale = e < 3 ? Rational(1) - Rational(1, static_cast<std::int64_t>(ipow(p, (3 - e) / 2)))
                                 : Rational(1) - Rational(static_cast<std::int64_t>(ipow(p, (e - 3) / 2)));
    lf.value = scale * series_sum(lf.normalized, lf.fit);
  }
  return lf;
}

Rational LaurentSeries::at(int k) const {
  const int idx = k - valuation;
  if (idx < 0) return Rational();
  if (idx >= static_cast<int>(coeffs.size())) throw DomainError("LaurentSeries: coefficient beyond expansion");
  return coeffs[static_cast<std::size_t>(idx)];
}

LaurentSeries expand_rational(std::span<const Rational> num, std::span<const Rational> den, int shift,
                              std::size_t terms) {
  if (den.empty() || den[0].is_zero()) throw DomainError("expand_rational: den(0) must be nonzero");
  LaurentSeries s;
  s.valuation = shift;
  s.coeffs.resize(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = k < num.size() ? num[k] : Rational();
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) acc -= den[j] * s.coeffs[k - j];
    s.coeffs[k] = acc / den[0];
  }
  return s;
}

LaurentSeries tabulated_local_series(ShadowCase which, std::size_t terms) {
  switch (which) {
    case ShadowCase::origin: {
      // (2^{4s} - 2^{2s+3} + 2^7) / ((1 - 2^{2-s}) (2^{2s} - 8))
      const std::vector<Rational> num{1, 0, -8, 0, 128};
      const std::vector<Rational> den{1, -4, -8, 32};
      return expand_rational(num, den, -2, terms);
    }
    case ShadowCase::special: {
      // (1 + 2^{4-2s}) / (1 - 2^{2-s})
      const std::vector<Rational> num{1, 0, 16};
      const std::vector<Rational> den{1, -4};
      return expand_rational(num, den, 0, terms);
    }
    case ShadowCase::generic: {
      const std::vector<Rational> num{1};
      const std::vector<Rational> den{1, -4};
      return expand_rational(num, den, 0, terms);
    }
  }
  throw DomainError("tabulated_local_series: unknown case");
}

}  // namespace m2v::localcount

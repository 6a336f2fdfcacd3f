#pragma once
// Congruence counts behind the local L-series
//   L_p(n, gamma, s) = sum_nu p^(-nu s) #{v mod p^nu : Q(v - gamma) + n = 0 mod p^nu},
// and the limit values read off from them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "m2v/qseries.hpp"
#include "m2v/rational.hpp"

namespace m2v::localcount {

using qseries::CosetVector;
using qseries::GramForm;

/// Default ceiling on p^(nu*e), the number of points enumerated.
inline constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 26;

/// #{v in (Z/p^nu)^e : Q(v - gamma) + n = 0 mod p^nu}. Needs n + Q(gamma)
/// integral; throws FeasibilityError when p^(nu*e) exceeds the ceiling.
std::uint64_t count_congruence(const GramForm& form, const CosetVector& gamma, const Rational& n, std::uint64_t p,
                               unsigned nu, std::uint64_t ceiling = kDefaultCeiling);

/// count(nu) for nu = 0..nu_max.
std::vector<std::uint64_t> count_sequence(const GramForm& form, const CosetVector& gamma, const Rational& n,
                                          std::uint64_t p, unsigned nu_max, std::uint64_t ceiling = kDefaultCeiling);

/// count(nu) / p^(nu (e - 1)) for nu = 0..nu_max.
std::vector<Rational> density_ratio_sequence(const GramForm& form, const CosetVector& gamma, const Rational& n,
                                             std::uint64_t p, unsigned nu_max,
                                             std::uint64_t ceiling = kDefaultCeiling);

/// c[nu + L] = sum_{i=1..L} a[i-1] c[nu + L - i] + b for every nu >= onset
/// covered by the data.
struct RecurrenceFit {
  unsigned order = 0;
  unsigned onset = 0;
  std::vector<Rational> a;
  Rational b;
  /// Largest index used to determine the coefficients (onset + 2 * order).
  unsigned determined_by = 0;
  /// Number of further terms that confirmed the fit.
  unsigned confirmations = 0;
  /// All roots of x^L - a1 x^(L-1) - ... - aL strictly inside the unit disk.
  bool stable = false;
};

/// Smallest order (then smallest onset) affine recurrence that reproduces
/// the whole sequence, with at least min_confirm terms beyond the ones that
/// determine it. nullopt when none of order <= max_order fits.
std::optional<RecurrenceFit> fit_affine_recurrence(std::span<const Rational> c, unsigned max_order = 3,
                                                   unsigned min_confirm = 2);

/// Exact Schur-Cohn test: every root of sum coeffs[k] z^k lies in |z| < 1.
bool roots_inside_unit_disk(std::span<const Rational> coeffs);

/// Limit of the fitted sequence (stable fits only).
Rational fixed_point(const RecurrenceFit& fit);
/// sum_{nu >= 0} c[nu] when the fit is stable with b = 0.
Rational series_sum(std::span<const Rational> c, const RecurrenceFit& fit);

struct LocalFactor {
  /// c[nu] = count(nu) / p^(nu (e + 1) / 2).
  std::vector<Rational> normalized;
  RecurrenceFit fit;
  /// lim_{s -> 0} (1 - p^((e-3)/2 - 2s)) L_p(n, gamma, (1 + e)/2 + 2s).
  Rational value;
  /// First nu from which the raw sequence is literally constant, if any.
  std::optional<unsigned> constant_from;
};

/// Local factor for odd e. Throws ConsistencyError if no stable recurrence
/// explains the computed terms.
LocalFactor local_factor(const GramForm& form, const CosetVector& gamma, const Rational& n, std::uint64_t p,
                         unsigned nu_max, std::uint64_t ceiling = kDefaultCeiling);

/// Power series in t with a leading offset: sum_k coeffs[k] t^(valuation + k).
struct LaurentSeries {
  int valuation = 0;
  std::vector<Rational> coeffs;

  /// Coefficient of t^k (zero outside the stored range below the top).
  [[nodiscard]] Rational at(int k) const;
};

/// Expansion of t^shift * num(t) / den(t), den(0) != 0.
LaurentSeries expand_rational(std::span<const Rational> num, std::span<const Rational> den, int shift,
                              std::size_t terms);

/// The three tabulated closed forms of L_2(0, gamma, s) at n = 0 for the
/// indefinite ternary forms, in t = 2^(-s).
enum class ShadowCase { origin, special, generic };
LaurentSeries tabulated_local_series(ShadowCase which, std::size_t terms);

}  // namespace m2v::localcount

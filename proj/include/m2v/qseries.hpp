#pragma once
// Truncated q-expansions on the exponent grid (1/8)Z with exact rational
// coefficients, plus the theta, eta and Eisenstein constructors the
// identity checks are built from.
//
// Index k stands for q^(k/8). A series with trunc T knows every coefficient
// with index below T; nothing is claimed about indices >= T.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "m2v/rational.hpp"

namespace m2v::qseries {

inline constexpr std::int64_t kGrid = 8;

/// Smallest trunc that covers q^n for integer n (i.e. 8n + 1).
constexpr std::size_t trunc_for_order(std::int64_t n) { return static_cast<std::size_t>(kGrid * n + 1); }

class QSeries {
 public:
  QSeries() = default;
  /// Zero series, known up to (excluding) index trunc.
  explicit QSeries(std::size_t trunc) : coeffs_(trunc) {}
  /// Series whose index-k coefficient is coeffs[k]; trunc = coeffs.size().
  static QSeries from_coefficients(std::vector<Rational> coeffs);
  static QSeries one(std::size_t trunc);

  [[nodiscard]] std::size_t trunc() const { return coeffs_.size(); }
  /// Coefficient at grid index; throws DomainError for index >= trunc.
  [[nodiscard]] const Rational& at(std::size_t index) const;
  /// Coefficient of q^exponent; exponent*8 must be a known non-negative index.
  [[nodiscard]] Rational coeff(const Rational& exponent) const;
  /// Coefficient of q^n for integer n.
  [[nodiscard]] Rational coeff_q(std::int64_t n) const { return at(static_cast<std::size_t>(kGrid * n)); }
  void set(std::size_t index, Rational value);
  void add_to(std::size_t index, const Rational& value);

  /// Lowest index with a nonzero coefficient, or trunc() if none is known.
  [[nodiscard]] std::size_t valuation() const;
  /// gcd of all indices carrying nonzero coefficients (0 for the zero series).
  [[nodiscard]] std::size_t support_stride() const;
  [[nodiscard]] bool all_integer() const;
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same series cut down to a smaller trunc.
  [[nodiscard]] QSeries truncated(std::size_t trunc) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries subtract(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& factor);
/// Cauchy product; trunc is min(Ta + vb, Tb + va) with v the valuations,
/// so every reported coefficient is exact.
QSeries multiply(const QSeries& a, const QSeries& b);
/// a / b for b with nonzero constant term.
QSeries divide(const QSeries& a, const QSeries& b);
/// a^r, r may be negative (then a needs a nonzero constant term).
QSeries power(const QSeries& a, int r);
/// Multiplies by q^(shift/8); result keeps the requested trunc.
QSeries shift(const QSeries& a, std::size_t shift, std::size_t trunc);
/// tau -> m*tau: index k moves to m*k, trunc scales by m.
QSeries rescale_exponents(const QSeries& a, std::size_t m);
/// q^n -> (-1)^n q^n; support must lie on integer exponents.
QSeries alternate_signs(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return subtract(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }

/// Integral quadratic form Q(x) = x^T S x / 2 given by its Gram matrix S
/// (symmetric, integral, even diagonal).
class GramForm {
 public:
  GramForm(std::size_t dim, std::vector<std::int64_t> gram_row_major);
  static GramForm diagonal(std::initializer_list<std::int64_t> diag);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::int64_t operator()(std::size_t i, std::size_t j) const { return gram_[i * dim_ + j]; }
  [[nodiscard]] Rational value(std::span<const Rational> x) const;
  [[nodiscard]] std::int64_t value(std::span<const std::int64_t> x) const;
  /// |det S| via exact rational elimination.
  [[nodiscard]] Rational determinant() const;
  /// All leading principal minors positive.
  [[nodiscard]] bool is_positive_definite() const;
  /// Same form with coordinates permuted: new coordinate i is old perm[i].
  [[nodiscard]] GramForm permuted(std::span<const std::size_t> perm) const;

 private:
  std::size_t dim_;
  std::vector<std::int64_t> gram_;
};

/// A representative gamma of S^{-1} Z^e, i.e. S*gamma integral.
class CosetVector {
 public:
  CosetVector(const GramForm& form, std::vector<Rational> components);
  static CosetVector zero(const GramForm& form);

  [[nodiscard]] const std::vector<Rational>& components() const { return components_; }
  [[nodiscard]] std::size_t dim() const { return components_.size(); }
  [[nodiscard]] CosetVector negated(const GramForm& form) const;
  /// Integer vector S*gamma.
  [[nodiscard]] std::vector<std::int64_t> image(const GramForm& form) const;

 private:
  std::vector<Rational> components_;
};

/// sum over lambda in gamma + Z^e with Q(lambda) < trunc/8 of q^Q(lambda).
/// Requires a positive-definite form; throws DomainError when an exponent
/// falls off the eighth grid.
QSeries theta_coset(const GramForm& form, const CosetVector& gamma, std::size_t trunc);

struct EtaFactor {
  std::int64_t multiplier;  // m in eta(m*tau)
  std::int64_t exponent;    // r
};

/// prod eta(m tau)^r expanded through the pentagonal number theorem. The
/// prefactor q^{sum m r / 24} must be a non-negative multiple of 1/8.
QSeries eta_quotient(std::span<const EtaFactor> factors, std::size_t trunc);

/// prod_{n>=1} (1 - q^{m n}) to the given trunc.
QSeries euler_product(std::int64_t multiplier, std::size_t trunc);

/// E2(tau) = 1 - 24 sum sigma1(n) q^n.
QSeries e2_level1(std::size_t trunc);

}  // namespace m2v::qseries

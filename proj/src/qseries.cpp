#include "m2v/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "m2v/arith.hpp"
#include "m2v/simd/kernels.hpp"

namespace m2v::qseries {
namespace {

// Strided view of a series: entries[k] is the coefficient at index k*stride.
struct Compressed {
  std::vector<Rational> entries;
};

Compressed compress(const QSeries& a, std::size_t stride, std::size_t length) {
  Compressed c;
  c.entries.resize(length);
  for (std::size_t k = 0; k < length && k * stride < a.trunc(); ++k) c.entries[k] = a.at(k * stride);
  return c;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool fits_i32(const std::vector<Rational>& v, std::int64_t& max_abs) {
  max_abs = 0;
  for (const Rational& r : v) {
    if (!r.is_integer()) return false;
    const std::int64_t x = r.num() < 0 ? -r.num() : r.num();
    if (x > std::numeric_limits<std::int32_t>::max()) return false;
    max_abs = std::max(max_abs, x);
  }
  return true;
}

// Integer Cauchy product through the dot-product kernel; false when the
// operands or the worst-case sums do not fit.
bool convolve_integer(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t out_len,
                      std::vector<Rational>& out) {
  std::int64_t ma = 0;
  std::int64_t mb = 0;
  if (!fits_i32(a, ma) || !fits_i32(b, mb)) return false;
  const auto bound = static_cast<long double>(ma) * static_cast<long double>(mb) *
                     static_cast<long double>(std::min(a.size(), b.size()) + 1);
  if (bound >= 0x1p62L) return false;

  std::vector<std::int32_t> av(a.size());
  std::vector<std::int32_t> brev(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) av[i] = static_cast<std::int32_t>(a[i].num());
  for (std::size_t j = 0; j < b.size(); ++j) brev[b.size() - 1 - j] = static_cast<std::int32_t>(b[j].num());

  out.assign(out_len, Rational());
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  for (std::size_t k = 0; k < out_len; ++k) {
    const std::size_t i0 = k + 1 > lb ? k + 1 - lb : 0;
    const std::size_t i1 = std::min(k, la - 1);
    if (la == 0 || lb == 0 || i0 > i1) continue;
    const std::size_t len = i1 - i0 + 1;
    const std::size_t boff = lb - 1 - k + i0;
    out[k] = Rational(simd::dot_i32(std::span(av).subspan(i0, len), std::span(brev).subspan(boff, len)));
  }
  return true;
}

void convolve_rational(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t out_len,
                       std::vector<Rational>& out) {
  out.assign(out_len, Rational());
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!b[j].is_zero()) nb.push_back(j);
  }
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : nb) {
      if (i + j >= out_len) break;
      out[i + j] += a[i] * b[j];
    }
  }
}

}  // namespace

QSeries QSeries::from_coefficients(std::vector<Rational> coeffs) {
  QSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

QSeries QSeries::one(std::size_t trunc) {
  QSeries s(trunc);
  if (trunc > 0) s.coeffs_[0] = Rational(1);
  return s;
}

const Rational& QSeries::at(std::size_t index) const {
  if (index >= coeffs_.size()) {
    throw DomainError("index " + std::to_string(index) + " beyond truncation " + std::to_string(coeffs_.size()));
  }
  return coeffs_[index];
}

Rational QSeries::coeff(const Rational& exponent) const {
  const Rational idx = exponent * Rational(kGrid);
  if (!idx.is_integer() || idx.num() < 0) throw DomainError("exponent " + exponent.str() + " is off the grid");
  return at(static_cast<std::size_t>(idx.num()));
}

void QSeries::set(std::size_t index, Rational value) {
  if (index >= coeffs_.size()) throw DomainError("set beyond truncation");
  coeffs_[index] = value;
}

void QSeries::add_to(std::size_t index, const Rational& value) {
  if (index >= coeffs_.size()) throw DomainError("add beyond truncation");
  coeffs_[index] += value;
}

std::size_t QSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return coeffs_.size();
}

std::size_t QSeries::support_stride() const {
  std::size_t g = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) g = std::gcd(g, k);
  }
  return g;
}

bool QSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_integer(); });
}

QSeries QSeries::truncated(std::size_t trunc) const {
  if (trunc > coeffs_.size()) throw DomainError("cannot extend a truncated series");
  return from_coefficients(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(trunc)));
}

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t t = std::min(a.trunc(), b.trunc());
  QSeries r(t);
  for (std::size_t k = 0; k < t; ++k) r.set(k, a.at(k) + b.at(k));
  return r;
}

QSeries subtract(const QSeries& a, const QSeries& b) {
  const std::size_t t = std::min(a.trunc(), b.trunc());
  QSeries r(t);
  for (std::size_t k = 0; k < t; ++k) r.set(k, a.at(k) - b.at(k));
  return r;
}

QSeries scale(const QSeries& a, const Rational& factor) {
  QSeries r(a.trunc());
  for (std::size_t k = 0; k < a.trunc(); ++k) r.set(k, a.at(k) * factor);
  return r;
}

QSeries multiply(const QSeries& a, const QSeries& b) {
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  const std::size_t t = std::min(a.trunc() + vb, b.trunc() + va);
  // Both supports are multiples of g, hence so is the product's.
  std::size_t g = std::gcd(a.support_stride(), b.support_stride());
  if (g == 0) return QSeries(t);
  const std::size_t la = ceil_div(a.trunc(), g);
  const std::size_t lb = ceil_div(b.trunc(), g);
  const std::size_t lc = ceil_div(t, g);
  const Compressed ca = compress(a, g, std::min(la, lc));
  const Compressed cb = compress(b, g, std::min(lb, lc));

  std::vector<Rational> prod;
  if (!convolve_integer(ca.entries, cb.entries, lc, prod)) convolve_rational(ca.entries, cb.entries, lc, prod);

  QSeries r(t);
  for (std::size_t k = 0; k < lc; ++k) {
    if (k * g < t && !prod[k].is_zero()) r.set(k * g, prod[k]);
  }
  return r;
}

QSeries divide(const QSeries& a, const QSeries& b) {
  if (b.trunc() == 0 || b.at(0).is_zero()) throw DomainError("divide: divisor needs a nonzero constant term");
  const std::size_t va = a.valuation();
  const std::size_t t = std::min(a.trunc(), b.trunc() + va);
  const Rational inv0 = Rational(1) / b.at(0);
  std::vector<std::size_t> nb;
  for (std::size_t j = 1; j < b.trunc() && j < t; ++j) {
    if (!b.at(j).is_zero()) nb.push_back(j);
  }
  QSeries c(t);
  for (std::size_t k = 0; k < t; ++k) {
    Rational acc = a.at(k);
    for (std::size_t j : nb) {
      if (j > k) break;
      const Rational& ck = c.at(k - j);
      if (!ck.is_zero()) acc -= b.at(j) * ck;
    }
    c.set(k, acc * inv0);
  }
  return c;
}

QSeries power(const QSeries& a, int r) {
  if (r < 0) return divide(QSeries::one(a.trunc()), power(a, -r));
  QSeries result = QSeries::one(a.trunc());
  QSeries base = a;
  while (r > 0) {
    if (r & 1) result = multiply(result, base);
    r >>= 1;
    if (r > 0) base = multiply(base, base);
  }
  return result;
}

QSeries shift(const QSeries& a, std::size_t by, std::size_t trunc) {
  if (trunc > a.trunc() + by) throw DomainError("shift: requested trunc exceeds known range");
  QSeries r(trunc);
  for (std::size_t k = by; k < trunc; ++k) r.set(k, a.at(k - by));
  return r;
}

QSeries rescale_exponents(const QSeries& a, std::size_t m) {
  if (m == 0) throw DomainError("rescale by zero");
  QSeries r(a.trunc() * m);
  for (std::size_t k = 0; k < a.trunc(); ++k) {
    if (!a.at(k).is_zero()) r.set(k * m, a.at(k));
  }
  return r;
}

QSeries alternate_signs(const QSeries& a) {
  QSeries r(a.trunc());
  for (std::size_t k = 0; k < a.trunc(); ++k) {
    const Rational& c = a.at(k);
    if (c.is_zero()) continue;
    if (k % kGrid != 0) throw DomainError("alternate_signs: support off the integer exponents");
    r.set(k, (k / kGrid) % 2 == 0 ? c : -c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Quadratic forms.

GramForm::GramForm(std::size_t dim, std::vector<std::int64_t> gram) : dim_(dim), gram_(std::move(gram)) {
  if (dim_ == 0 || gram_.size() != dim_ * dim_) throw std::invalid_argument("GramForm: bad dimensions");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (gram_[i * dim_ + i] % 2 != 0) throw std::invalid_argument("GramForm: odd diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i * dim_ + j] != gram_[j * dim_ + i]) throw std::invalid_argument("GramForm: not symmetric");
    }
  }
}

GramForm GramForm::diagonal(std::initializer_list<std::int64_t> diag) {
  const std::size_t e = diag.size();
  std::vector<std::int64_t> g(e * e, 0);
  std::size_t i = 0;
  for (std::int64_t d : diag) {
    g[i * e + i] = d;
    ++i;
  }
  return GramForm(e, std::move(g));
}

Rational GramForm::value(std::span<const Rational> x) const {
  Rational s;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::int64_t g = (*this)(i, j);
      if (g != 0) s += Rational(g) * x[i] * x[j];
    }
  }
  return s / Rational(2);
}

std::int64_t GramForm::value(std::span<const std::int64_t> x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    s = checked_add(s, checked_mul(checked_mul((*this)(i, i) / 2, x[i]), x[i]));
    for (std::size_t j = i + 1; j < dim_; ++j) s = checked_add(s, checked_mul(checked_mul((*this)(i, j), x[i]), x[j]));
  }
  return s;
}

namespace {

// Leading principal minors of S, by fraction-free style rational elimination.
std::vector<Rational> leading_minors(const GramForm& f) {
  const std::size_t e = f.dim();
  std::vector<Rational> m(e * e);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) m[i * e + j] = Rational(f(i, j));
  }
  std::vector<Rational> minors;
  Rational det(1);
  for (std::size_t k = 0; k < e; ++k) {
    const Rational pivot = m[k * e + k];
    det *= pivot;
    minors.push_back(det);
    if (pivot.is_zero()) {
      // Remaining minors are not needed once one vanishes.
      while (minors.size() < e) minors.push_back(Rational());
      break;
    }
    for (std::size_t i = k + 1; i < e; ++i) {
      const Rational factor = m[i * e + k] / pivot;
      for (std::size_t j = k; j < e; ++j) m[i * e + j] -= factor * m[k * e + j];
    }
  }
  return minors;
}

}  // namespace

Rational GramForm::determinant() const {
  // Full determinant with pivoting, since leading minors may vanish for
  // indefinite forms.
  const std::size_t e = dim_;
  std::vector<Rational> m(e * e);
  for (std::size_t i = 0; i < e * e; ++i) m[i] = Rational(gram_[i]);
  Rational det(1);
  for (std::size_t k = 0; k < e; ++k) {
    std::size_t p = k;
    while (p < e && m[p * e + k].is_zero()) ++p;
    if (p == e) return Rational();
    if (p != k) {
      for (std::size_t j = 0; j < e; ++j) std::swap(m[p * e + j], m[k * e + j]);
      det = -det;
    }
    det *= m[k * e + k];
    for (std::size_t i = k + 1; i < e; ++i) {
      const Rational factor = m[i * e + k] / m[k * e + k];
      for (std::size_t j = k; j < e; ++j) m[i * e + j] -= factor * m[k * e + j];
    }
  }
  return det.abs();
}

bool GramForm::is_positive_definite() const {
  for (const Rational& minor : leading_minors(*this)) {
    if (minor.sign() <= 0) return false;
  }
  return true;
}

GramForm GramForm::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dim_) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::int64_t> g(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) g[i * dim_ + j] = (*this)(perm[i], perm[j]);
  }
  return GramForm(dim_, std::move(g));
}

CosetVector::CosetVector(const GramForm& form, std::vector<Rational> components) : components_(std::move(components)) {
  if (components_.size() != form.dim()) throw std::invalid_argument("CosetVector: dimension mismatch");
  (void)image(form);
}

CosetVector CosetVector::zero(const GramForm& form) { return CosetVector(form, std::vector<Rational>(form.dim())); }

CosetVector CosetVector::negated(const GramForm& form) const {
  std::vector<Rational> neg;
  for (const Rational& c : components_) neg.push_back(-c);
  return CosetVector(form, std::move(neg));
}

std::vector<std::int64_t> CosetVector::image(const GramForm& form) const {
  std::vector<std::int64_t> out(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < form.dim(); ++j) s += Rational(form(i, j)) * components_[j];
    if (!s.is_integer()) throw std::invalid_argument("CosetVector: S*gamma is not integral");
    out[i] = s.num();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theta series of a positive-definite form over a coset.

namespace {

struct Decomposition {
  std::vector<Rational> diag;   // D_i > 0
  std::vector<Rational> upper;  // U_ij for j > i, row-major
};

// Q(x) = sum_i D_i (x_i + sum_{j>i} U_ij x_j)^2 with A = S/2 = U^T D U.
Decomposition decompose(const GramForm& f) {
  const std::size_t e = f.dim();
  Decomposition d{std::vector<Rational>(e), std::vector<Rational>(e * e)};
  auto a = [&](std::size_t i, std::size_t j) { return Rational(f(i, j), 2); };
  for (std::size_t i = 0; i < e; ++i) {
    Rational di = a(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= d.diag[k] * d.upper[k * e + i] * d.upper[k * e + i];
    if (di.sign() <= 0) throw DomainError("theta_coset: form is not positive definite");
    d.diag[i] = di;
    for (std::size_t j = i + 1; j < e; ++j) {
      Rational uij = a(i, j);
      for (std::size_t k = 0; k < i; ++k) uij -= d.diag[k] * d.upper[k * e + i] * d.upper[k * e + j];
      d.upper[i * e + j] = uij / di;
    }
  }
  return d;
}

struct ThetaWalker {
  const Decomposition& dec;
  const std::vector<Rational>& gamma;
  Rational budget;  // Q(lambda) <= budget
  std::size_t e;
  std::vector<Rational> x;
  QSeries& out;

  void walk(std::size_t level_plus_one, const Rational& used) {
    if (level_plus_one == 0) {
      const Rational idx = used * Rational(kGrid);
      if (!idx.is_integer()) throw DomainError("theta_coset: exponent " + used.str() + " is off the eighth grid");
      out.add_to(static_cast<std::size_t>(idx.num()), Rational(1));
      return;
    }
    const std::size_t i = level_plus_one - 1;
    Rational c = gamma[i];
    for (std::size_t j = i + 1; j < e; ++j) c += dec.upper[i * e + j] * x[j];
    const Rational room = budget - used;
    if (room.sign() < 0) return;
    const double rho = (room / dec.diag[i]).to_double();
    const double w = c.to_double();
    const double r = std::sqrt(std::max(rho, 0.0));
    const auto lo = static_cast<std::int64_t>(std::floor(-r - w)) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil(r - w)) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      const Rational t = Rational(v) + c;
      const Rational term = dec.diag[i] * t * t;
      if (term > room) continue;
      x[i] = gamma[i] + Rational(v);
      walk(i, used + term);
    }
  }
};

}  // namespace

QSeries theta_coset(const GramForm& form, const CosetVector& gamma, std::size_t trunc) {
  if (gamma.dim() != form.dim()) throw std::invalid_argument("theta_coset: dimension mismatch");
  if (!form.is_positive_definite()) throw DomainError("theta_coset: form is not positive definite");
  QSeries out(trunc);
  if (trunc == 0) return out;
  const Decomposition dec = decompose(form);
  ThetaWalker walker{dec, gamma.components(), Rational(static_cast<std::int64_t>(trunc - 1), kGrid), form.dim(),
                     std::vector<Rational>(form.dim()), out};
  walker.walk(form.dim(), Rational());
  return out;
}

// ---------------------------------------------------------------------------
// Eta products.

QSeries euler_product(std::int64_t multiplier, std::size_t trunc) {
  if (multiplier <= 0) throw DomainError("euler_product: multiplier must be positive");
  QSeries s(trunc);
  // prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}, k over all integers.
  for (std::int64_t k = 0;; ++k) {
    bool any = false;
    for (std::int64_t kk : {k, -k - 1}) {
      const std::int64_t pent = kk * (3 * kk - 1) / 2;
      const std::int64_t idx = kGrid * multiplier * pent;
      if (static_cast<std::size_t>(idx) < trunc) {
        s.add_to(static_cast<std::size_t>(idx), Rational(kk % 2 == 0 ? 1 : -1));
        any = true;
      }
    }
    if (!any) break;
  }
  return s;
}

QSeries eta_quotient(std::span<const EtaFactor> factors, std::size_t trunc) {
  std::int64_t weight = 0;
  for (const EtaFactor& f : factors) {
    if (f.multiplier <= 0) throw DomainError("eta_quotient: multipliers must be positive");
    weight += f.multiplier * f.exponent;
  }
  // q^{weight/24} = index weight/3 on the eighth grid.
  if (weight % 3 != 0) throw DomainError("eta_quotient: prefactor q^(" + std::to_string(weight) + "/24) is off the grid");
  if (weight < 0) throw DomainError("eta_quotient: negative prefactor exponent");
  const auto offset = static_cast<std::size_t>(weight / 3);
  if (trunc <= offset) return QSeries(trunc);
  const std::size_t inner = trunc - offset;

  QSeries numerator = QSeries::one(inner);
  QSeries denominator = QSeries::one(inner);
  for (const EtaFactor& f : factors) {
    if (f.exponent == 0) continue;
    const QSeries p = power(euler_product(f.multiplier, inner), static_cast<int>(f.exponent > 0 ? f.exponent : -f.exponent));
    if (f.exponent > 0) {
      numerator = multiply(numerator, p);
    } else {
      denominator = multiply(denominator, p);
    }
  }
  return shift(divide(numerator, denominator), offset, trunc);
}

QSeries e2_level1(std::size_t trunc) {
  QSeries s(trunc);
  if (trunc == 0) return s;
  s.set(0, Rational(1));
  for (std::size_t n = 1; n * kGrid < trunc; ++n) s.set(n * kGrid, Rational(-24 * arith::sigma1(n)));
  return s;
}

}  // namespace m2v::qseries

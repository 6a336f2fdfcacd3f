#pragma once
// Multiplicative and divisor-sum kernels.

#include <cstdint>
#include <optional>
#include <vector>

#include "m2v/rational.hpp"

namespace m2v::arith {

/// Sum of the positive divisors of n. Returns 0 for n == 0, which is how the
/// piecewise formulas treat terms like sigma1(n/4) when n/4 is not a
/// positive integer.
std::int64_t sigma1(std::uint64_t n);

/// sigma1(num/den): 0 unless num/den is a positive integer.
std::int64_t sigma1_frac(std::uint64_t num, std::uint64_t den);

/// (1/2) * sum_{d|n} min(d, n/d).
Rational lambda1(std::uint64_t n);

/// sum_{d|n} min(d, n/d), i.e. 2*lambda1(n).
std::int64_t min_divisor_sum(std::uint64_t n);

/// The even character mod 8: +1 on n = +-1, -1 on n = +-3, 0 on even n.
int chi8(std::int64_t n);

/// sum_{d|n} chi8(n/d) * d.
std::int64_t sigma1_chi(std::uint64_t n);

struct TwoAdicSplit {
  unsigned nu;
  std::uint64_t odd;
};
/// n = 2^nu * odd, n >= 1.
TwoAdicSplit split2(std::uint64_t n);

/// Floor square root, exact for the whole uint64 range.
std::uint64_t isqrt(std::uint64_t n);
/// Root when n is a perfect square.
std::optional<std::uint64_t> square_root(std::uint64_t n);
inline bool is_square(std::uint64_t n) { return square_root(n).has_value(); }

/// Trial-division factorisation, ascending primes.
struct PrimePower {
  std::uint64_t p;
  unsigned e;
};
std::vector<PrimePower> factor(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

/// Modular exponentiation, modulus < 2^63.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Legendre symbol (a|p) for odd prime p.
int legendre(std::int64_t a, std::uint64_t p);
/// A square root of a modulo an odd prime p (Tonelli-Shanks); a must be a
/// quadratic residue.
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Sieved tables of sigma1, sigma1_chi and min_divisor_sum on [0, limit].
/// Built once, read-only afterwards.
class DivisorTable {
 public:
  explicit DivisorTable(std::uint64_t limit);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::int64_t sigma1(std::uint64_t n) const;
  [[nodiscard]] std::int64_t sigma1_chi(std::uint64_t n) const;
  [[nodiscard]] std::int64_t min_divisor_sum(std::uint64_t n) const;
  [[nodiscard]] Rational lambda1(std::uint64_t n) const { return Rational(min_divisor_sum(n), 2); }
  /// sigma1(num/den), zero when not a positive integer.
  [[nodiscard]] std::int64_t sigma1_frac(std::uint64_t num, std::uint64_t den) const;

 private:
  void check(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::int64_t> sigma_;
  std::vector<std::int64_t> sigma_chi_;
  std::vector<std::int64_t> min_sum_;
};

}  // namespace m2v::arith

#pragma once
// Hurwitz class numbers from reduced binary forms, and representation
// counts by diagonal ternary forms.

#include <array>
#include <cstdint>
#include <vector>

#include "m2v/rational.hpp"

namespace m2v::classnum {

/// H(n): classes of positive-definite forms of discriminant -n, weighted
/// 1/2 and 1/3 for the square and hexagonal classes; H(0) = -1/12 and
/// H(n) = 0 for n = 1, 2 mod 4.
Rational hurwitz(std::int64_t n);

/// H(0..limit) from one sweep over reduced triples (a, b, c).
class HurwitzTable {
 public:
  explicit HurwitzTable(std::int64_t limit);

  [[nodiscard]] std::int64_t limit() const { return limit_; }
  /// H(n) for 0 <= n <= limit; throws FeasibilityError above the limit and
  /// DomainError for negative n.
  [[nodiscard]] Rational operator()(std::int64_t n) const;
  /// 12 * H(n) as an integer (-1 at n = 0).
  [[nodiscard]] std::int64_t twelve_h(std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::int64_t> twelve_h_;
};

/// #{(x, y, z) : c1 x^2 + c2 y^2 + c3 z^2 = n}, signs and order counted.
std::int64_t rep_count_ternary(const std::array<std::int64_t, 3>& coeffs, std::int64_t n);

/// r3(n) = rep_count_ternary({1, 1, 1}, n).
inline std::int64_t r3(std::int64_t n) { return rep_count_ternary({1, 1, 1}, n); }

/// rep_count_ternary for every n in [0, limit] at once.
class RepTable {
 public:
  RepTable(const std::array<std::int64_t, 3>& coeffs, std::int64_t limit);

  [[nodiscard]] std::int64_t limit() const { return limit_; }
  [[nodiscard]] const std::array<std::int64_t, 3>& coeffs() const { return coeffs_; }
  /// Count for 0 <= n <= limit, 0 for negative n.
  [[nodiscard]] std::int64_t operator()(std::int64_t n) const;

 private:
  std::array<std::int64_t, 3> coeffs_;
  std::int64_t limit_;
  std::vector<std::int64_t> counts_;
};

}  // namespace m2v::classnum

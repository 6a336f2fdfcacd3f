#include "m2v/classnum.hpp"

#include <string>

#include "m2v/arith.hpp"

namespace m2v::classnum {
namespace {

// Weight of the reduced form (a, b, c) in units of 1/12.
std::int64_t form_weight(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == b && b == c) return 4;  // multiple of x^2 + xy + y^2
  if (b == 0 && a == c) return 6;  // multiple of x^2 + y^2
  return 12;
}

bool is_reduced(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t ab = b < 0 ? -b : b;
  if (ab > a || a > c) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

}  // namespace

Rational hurwitz(std::int64_t n) {
  if (n < 0) throw DomainError("hurwitz: negative argument " + std::to_string(n));
  if (n == 0) return Rational(-1, 12);
  if (n % 4 == 1 || n % 4 == 2) return Rational();
  std::int64_t total = 0;
  // 4ac - b^2 = n with |b| <= a <= c gives 3a^2 <= n.
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = n + b * b;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (is_reduced(a, b, c)) total += form_weight(a, b, c);
    }
  }
  return Rational(total, 12);
}

HurwitzTable::HurwitzTable(std::int64_t limit) : limit_(limit) {
  if (limit < 0) throw DomainError("HurwitzTable: negative limit");
  twelve_h_.assign(static_cast<std::size_t>(limit) + 1, 0);
  twelve_h_[0] = -1;
  for (std::int64_t a = 1; 3 * a * a <= limit; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      // c runs from a while 4ac - b^2 stays within the table.
      for (std::int64_t c = a; 4 * a * c - b * b <= limit; ++c) {
        if (!is_reduced(a, b, c)) continue;
        twelve_h_[static_cast<std::size_t>(4 * a * c - b * b)] += form_weight(a, b, c);
      }
    }
  }
}

std::int64_t HurwitzTable::twelve_h(std::int64_t n) const {
  if (n < 0) throw DomainError("HurwitzTable: negative argument " + std::to_string(n));
  if (n > limit_) {
    throw FeasibilityError("HurwitzTable: argument " + std::to_string(n) + " above limit " + std::to_string(limit_));
  }
  return twelve_h_[static_cast<std::size_t>(n)];
}

Rational HurwitzTable::operator()(std::int64_t n) const { return Rational(twelve_h(n), 12); }

std::int64_t rep_count_ternary(const std::array<std::int64_t, 3>& coeffs, std::int64_t n) {
  for (std::int64_t c : coeffs) {
    if (c < 1) throw DomainError("rep_count_ternary: coefficients must be positive");
  }
  if (n < 0) return 0;
  const auto [c1, c2, c3] = coeffs;
  std::int64_t count = 0;
  for (std::int64_t x = 0; c1 * x * x <= n; ++x) {
    const std::int64_t rx = n - c1 * x * x;
    const std::int64_t wx = x == 0 ? 1 : 2;
    for (std::int64_t y = 0; c2 * y * y <= rx; ++y) {
      const std::int64_t ry = rx - c2 * y * y;
      if (ry % c3 != 0) continue;
      const auto z = arith::square_root(static_cast<std::uint64_t>(ry / c3));
      if (!z) continue;
      count += wx * (y == 0 ? 1 : 2) * (*z == 0 ? 1 : 2);
    }
  }
  return count;
}

RepTable::RepTable(const std::array<std::int64_t, 3>& coeffs, std::int64_t limit) : coeffs_(coeffs), limit_(limit) {
  for (std::int64_t c : coeffs) {
    if (c < 1) throw DomainError("RepTable: coefficients must be positive");
  }
  if (limit < 0) throw DomainError("RepTable: negative limit");
  counts_.assign(static_cast<std::size_t>(limit) + 1, 0);
  const auto [c1, c2, c3] = coeffs;
  for (std::int64_t x = 0; c1 * x * x <= limit; ++x) {
    const std::int64_t wx = x == 0 ? 1 : 2;
    for (std::int64_t y = 0; c1 * x * x + c2 * y * y <= limit; ++y) {
      const std::int64_t wy = y == 0 ? 1 : 2;
      for (std::int64_t z = 0;; ++z) {
        const std::int64_t v = c1 * x * x + c2 * y * y + c3 * z * z;
        if (v > limit) break;
        counts_[static_cast<std::size_t>(v)] += wx * wy * (z == 0 ? 1 : 2);
      }
    }
  }
}

std::int64_t RepTable::operator()(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > limit_) {
    throw FeasibilityError("RepTable: argument " + std::to_string(n) + " above limit " + std::to_string(limit_));
  }
  return counts_[static_cast<std::size_t>(n)];
}

}  // namespace m2v::classnum

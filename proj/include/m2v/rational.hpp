#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace m2v {

/// Raised when an exact computation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Argument outside the domain of an operation (parity, congruence, sign).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested work exceeds a configured enumeration ceiling.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check produced a value that cannot be right.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
///
/// All arithmetic is carried out with 128-bit intermediates and throws
/// OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  /// Integer value; throws DomainError when the value is not integral.
  [[nodiscard]] std::int64_t to_integer() const;
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Always "p/q", including q = 1.
  [[nodiscard]] std::string str() const;
  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

namespace detail {
std::int64_t checked_narrow(__int128 v);
}

/// Overflow-checked 64-bit helpers used by the integer kernels.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

}  // namespace m2v

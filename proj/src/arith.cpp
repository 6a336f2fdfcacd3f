#include "m2v/arith.hpp"

#include <cmath>
#include <string>

namespace m2v::arith {

std::int64_t sigma1(std::uint64_t n) {
  if (n == 0) return 0;
  std::int64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s = checked_add(s, static_cast<std::int64_t>(d));
    const std::uint64_t e = n / d;
    if (e != d) s = checked_add(s, static_cast<std::int64_t>(e));
  }
  return s;
}

std::int64_t sigma1_frac(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num % den != 0) return 0;
  return sigma1(num / den);
}

std::int64_t min_divisor_sum(std::uint64_t n) {
  if (n == 0) return 0;
  std::int64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    // d <= n/d here, so the pair (d, n/d) contributes d twice unless d*d == n.
    s += static_cast<std::int64_t>(d) * (d * d == n ? 1 : 2);
  }
  return s;
}

Rational lambda1(std::uint64_t n) { return Rational(min_divisor_sum(n), 2); }

int chi8(std::int64_t n) {
  switch (((n % 8) + 8) % 8) {
    case 1:
    case 7: return 1;
    case 3:
    case 5: return -1;
    default: return 0;
  }
}

std::int64_t sigma1_chi(std::uint64_t n) {
  if (n == 0) return 0;
  std::int64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    s += chi8(static_cast<std::int64_t>(e)) * static_cast<std::int64_t>(d);
    if (e != d) s += chi8(static_cast<std::int64_t>(d)) * static_cast<std::int64_t>(e);
  }
  return s;
}

TwoAdicSplit split2(std::uint64_t n) {
  if (n == 0) throw DomainError("split2 needs n >= 1");
  const auto nu = static_cast<unsigned>(__builtin_ctzll(n));
  return {nu, n >> nu};
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::uint64_t> square_root(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw DomainError("factor(0)");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::uint64_t p) {
  const auto pm = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % pm) + pm) % pm);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre(static_cast<std::int64_t>(a), p) != 1) {
    throw DomainError(std::to_string(a) + " is not a square mod " + std::to_string(p));
  }
  // p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(static_cast<std::int64_t>(z), p) != -1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = static_cast<std::uint64_t>(static_cast<unsigned __int128>(tt) * tt % p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + 1 < m - i; ++k) {
      b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % p);
    }
    m = i;
    c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % p);
    t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * c % p);
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % p);
  }
  return r;
}

DivisorTable::DivisorTable(std::uint64_t limit)
    : limit_(limit), sigma_(limit + 1, 0), sigma_chi_(limit + 1, 0), min_sum_(limit + 1, 0) {
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t k = 1, m = d; m <= limit; ++k, m += d) {
      sigma_[m] += static_cast<std::int64_t>(d);
      sigma_chi_[m] += chi8(static_cast<std::int64_t>(k)) * static_cast<std::int64_t>(d);
      min_sum_[m] += static_cast<std::int64_t>(d < k ? d : k);
    }
  }
}

void DivisorTable::check(std::uint64_t n) const {
  if (n > limit_) {
    throw FeasibilityError("divisor table limit " + std::to_string(limit_) + " exceeded by " +
                           std::to_string(n));
  }
}

std::int64_t DivisorTable::sigma1(std::uint64_t n) const {
  check(n);
  return sigma_[n];
}

std::int64_t DivisorTable::sigma1_chi(std::uint64_t n) const {
  check(n);
  return sigma_chi_[n];
}

std::int64_t DivisorTable::min_divisor_sum(std::uint64_t n) const {
  check(n);
  return min_sum_[n];
}

std::int64_t DivisorTable::sigma1_frac(std::uint64_t num, std::uint64_t den) const {
  if (den == 0 || num % den != 0) return 0;
  return sigma1(num / den);
}

}  // namespace m2v::arith

#include "m2v/zsqrt2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "m2v/arith.hpp"
#include "m2v/rational.hpp"

namespace m2v::zsqrt2 {
namespace {

// Prime elements above p, one per prime ideal (two for split p).
std::vector<Element> split_prime(std::uint64_t p) {
  const auto x = static_cast<__int128>(arith::sqrt_mod_prime(2, p));
  // Lattice {(a, b) : a + b x = 0 mod p}, Gauss-reduced for a^2 + 2 b^2.
  __int128 u0 = static_cast<__int128>(p), u1 = 0;
  __int128 v0 = -x, v1 = 1;
  auto dot = [](__int128 a0, __int128 a1, __int128 b0, __int128 b1) { return a0 * b0 + 2 * a1 * b1; };
  if (dot(u0, u1, u0, u1) < dot(v0, v1, v0, v1)) {
    std::swap(u0, v0);
    std::swap(u1, v1);
  }
  for (;;) {
    // u is the longer vector; subtract the nearest multiple of v.
    const __int128 vv = dot(v0, v1, v0, v1);
    const __int128 uv = dot(u0, u1, v0, v1);
    __int128 k = uv / vv;
    if (2 * (uv - k * vv) > vv) ++k;
    if (2 * (uv - k * vv) < -vv) --k;
    u0 -= k * v0;
    u1 -= k * v1;
    if (dot(u0, u1, u0, u1) >= vv) break;
    std::swap(u0, v0);
    std::swap(u1, v1);
  }
  const Element pi{static_cast<std::int64_t>(v0), static_cast<std::int64_t>(v1)};
  const std::int64_t nrm = pi.norm();
  if (nrm != static_cast<std::int64_t>(p) && nrm != -static_cast<std::int64_t>(p)) {
    throw ConsistencyError("lattice reduction missed a prime of norm " + std::to_string(p));
  }
  return {pi, conjugate(pi)};
}

Element power(Element x, unsigned e) {
  Element r{1, 0};
  for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

}  // namespace

std::int64_t Element::norm() const { return checked_add(checked_mul(a, a), -checked_mul(2, checked_mul(b, b))); }

Element multiply(const Element& x, const Element& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(2, checked_mul(x.b, y.b))),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a))};
}

Element conjugate(const Element& x) { return {x.a, -x.b}; }

IdealRep reduce_to_minimal_trace(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw DomainError("reduce_to_minimal_trace: zero element");
  Element x{a, b};
  if (x.norm() < 0) x = multiply(x, kFundamentalUnit);
  if (x.a < 0) x = {-x.a, -x.b};
  // Along the orbit the rational part is convex in the exponent, so walking
  // downhill ends at the minimum.
  for (;;) {
    const Element up{checked_add(3 * x.a, -4 * x.b), checked_add(-2 * x.a, 3 * x.b)};   // times (3 - 2 sqrt2)
    const Element down{checked_add(3 * x.a, 4 * x.b), checked_add(2 * x.a, 3 * x.b)};  // times (3 + 2 sqrt2)
    if (up.a < x.a) {
      x = up;
    } else if (down.a < x.a) {
      x = down;
    } else {
      if (up.a == x.a && up.b > x.b) x = up;
      if (down.a == x.a && down.b > x.b) x = down;
      break;
    }
  }
  return {x.a, x.b, static_cast<std::uint64_t>(x.norm())};
}

std::vector<IdealRep> ideals_of_norm(std::uint64_t m) {
  if (m == 0) throw DomainError("ideals_of_norm: m must be positive");
  std::vector<Element> gens{{1, 0}};
  for (const auto& [p, e] : arith::factor(m)) {
    std::vector<Element> local;
    if (p == 2) {
      local.push_back(power({0, 1}, e));
    } else if (arith::chi8(static_cast<std::int64_t>(p)) == 1) {
      const auto pis = split_prime(p);
      for (unsigned i = 0; i <= e; ++i) local.push_back(multiply(power(pis[0], i), power(pis[1], e - i)));
    } else {
      if (e % 2 != 0) return {};
      local.push_back(power({static_cast<std::int64_t>(p), 0}, e / 2));
    }
    std::vector<Element> next;
    for (const Element& g : gens) {
      for (const Element& l : local) {
        const IdealRep r = reduce_to_minimal_trace(g.a, g.b);
        const IdealRep s = reduce_to_minimal_trace(l.a, l.b);
        next.push_back(multiply({r.a, r.b}, {s.a, s.b}));
      }
    }
    gens = std::move(next);
  }
  std::set<IdealRep> reps;
  for (const Element& g : gens) reps.insert(reduce_to_minimal_trace(g.a, g.b));
  return {reps.begin(), reps.end()};
}

std::vector<IdealRep> ideals_of_norm_brute(std::uint64_t m) {
  if (m == 0) throw DomainError("ideals_of_norm_brute: m must be positive");
  // A canonical generator has a >= 2|b|, hence b^2 <= m/2.
  const auto bmax = static_cast<std::int64_t>(arith::isqrt(m / 2));
  std::set<IdealRep> reps;
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    const auto a = arith::square_root(m + 2 * static_cast<std::uint64_t>(b * b));
    if (!a) continue;
    reps.insert(reduce_to_minimal_trace(static_cast<std::int64_t>(*a), b));
  }
  return {reps.begin(), reps.end()};
}

std::int64_t correction_sum(std::uint64_t m) {
  std::int64_t s = 0;
  for (const IdealRep& r : ideals_of_norm(m)) s += (r.b < 0 ? -r.b : r.b) - r.a;
  return s;
}

std::int64_t correction_sum_conjugation_orbits(std::uint64_t m) {
  const auto ideals = ideals_of_norm(m);
  std::set<IdealRep> seen;
  std::int64_t s = 0;
  for (const IdealRep& r : ideals) {
    if (seen.count(r)) continue;
    const IdealRep c = reduce_to_minimal_trace(r.a, -r.b);
    seen.insert(r);
    seen.insert(c);
    const int weight = (c == r) ? 1 : 2;
    s += weight * ((r.b < 0 ? -r.b : r.b) - r.a);
  }
  return s;
}

}  // namespace m2v::zsqrt2

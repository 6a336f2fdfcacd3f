#pragma once
// Ideals of Z[sqrt2] of a given norm, each held by a canonical generator.
//
// Every ideal is principal. Its generators of positive norm form one orbit
// under multiplication by +-(3 + 2 sqrt2)^k; the canonical generator is the
// member of that orbit with the smallest positive rational part a, and
// b >= 0 when two members tie.

#include <compare>
#include <cstdint>
#include <vector>

namespace m2v::zsqrt2 {

struct Element {
  std::int64_t a = 0;
  std::int64_t b = 0;  // a + b sqrt2

  [[nodiscard]] std::int64_t norm() const;  // a^2 - 2 b^2
  friend bool operator==(const Element&, const Element&) = default;
};

Element multiply(const Element& x, const Element& y);
Element conjugate(const Element& x);

/// The fundamental unit 1 + sqrt2 and the norm-one unit 3 + 2 sqrt2
/// (3 + sqrt8 in the other basis).
inline constexpr Element kFundamentalUnit{1, 1};
inline constexpr Element kNormOneUnit{3, 2};

struct IdealRep {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t norm = 0;

  friend bool operator==(const IdealRep&, const IdealRep&) = default;
  friend auto operator<=>(const IdealRep&, const IdealRep&) = default;
};

/// Canonical generator of the ideal (a + b sqrt2); (a, b) != (0, 0).
IdealRep reduce_to_minimal_trace(std::int64_t a, std::int64_t b);

/// One IdealRep per ideal of norm m, sorted. Factors m and assembles the
/// ideals from prime ideals.
std::vector<IdealRep> ideals_of_norm(std::uint64_t m);
/// Same set by scanning the bounded box |b| <= sqrt(m/2), a^2 = m + 2 b^2.
std::vector<IdealRep> ideals_of_norm_brute(std::uint64_t m);

/// sum over ideals of norm m of (|b| - a).
std::int64_t correction_sum(std::uint64_t m);
/// The same sum grouped by conjugate pairs: one representative per pair,
/// weighted 2 when the pair has two distinct ideals and 1 otherwise.
std::int64_t correction_sum_conjugation_orbits(std::uint64_t m);

}  // namespace m2v::zsqrt2

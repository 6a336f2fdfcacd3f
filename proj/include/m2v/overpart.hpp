#pragma once
// Overpartitions, the M2-rank, and the even-minus-odd rank count.

#include <cstdint>
#include <functional>
#include <vector>

#include "m2v/classnum.hpp"

namespace m2v::overpart {

/// Default and absolute ceilings for exhaustive enumeration.
inline constexpr std::int64_t kDefaultBruteCeiling = 40;
inline constexpr std::int64_t kMaxBruteCeiling = 60;

/// A pair (distinct overlined parts, ordinary parts), both listed in
/// decreasing order.
struct Overpartition {
  std::vector<std::int64_t> overlined;
  std::vector<std::int64_t> plain;

  [[nodiscard]] std::int64_t weight() const;
  friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

struct M2Stats {
  std::int64_t ell = 0;          // largest part
  std::int64_t nparts = 0;
  std::int64_t n_odd_plain = 0;  // odd non-overlined parts, with multiplicity
  int chi = 0;                   // largest part odd and not overlined
};

/// Stats of an overpartition. If the largest value occurs both overlined
/// and plain it counts as overlined, so chi = 0.
M2Stats m2_stats(const Overpartition& op);
/// ceil(ell/2) - nparts + n_odd_plain - chi; 0 for the empty overpartition.
std::int64_t m2_rank(const Overpartition& op);

/// Calls fn once for every overpartition of n, built as a distinct
/// partition of n1 paired with an ordinary partition of n - n1.
void for_each_overpartition(std::int64_t n, const std::function<void(const Overpartition&)>& fn);
std::vector<Overpartition> enumerate_overpartitions(std::int64_t n);

/// p-bar(0..limit) from the product prod (1 + x^k) / (1 - x^k).
std::vector<std::int64_t> overpartition_numbers(std::int64_t limit);

/// M2e(n) - M2o(n) by exhaustive enumeration. Throws FeasibilityError when
/// n exceeds the ceiling or the ceiling exceeds kMaxBruteCeiling.
std::int64_t alpha2_brute(std::int64_t n, std::int64_t ceiling = kDefaultBruteCeiling);
/// alpha2_brute for 0..limit in one pass over shared partition lists.
std::vector<std::int64_t> alpha2_brute_range(std::int64_t limit, std::int64_t ceiling = kDefaultBruteCeiling);

/// Closed form from r3 and H. Throws ConsistencyError when a value that
/// must be an integer is not.
std::int64_t alpha2_closed(std::int64_t n);

/// alpha2_closed on [0, limit] backed by sieved tables.
class Alpha2Table {
 public:
  explicit Alpha2Table(std::int64_t limit);
  Alpha2Table(const classnum::HurwitzTable& h, const classnum::RepTable& r3, std::int64_t limit);

  [[nodiscard]] std::int64_t limit() const { return limit_; }
  /// alpha2(n); 0 for negative n.
  [[nodiscard]] std::int64_t operator()(std::int64_t n) const;
  /// |alpha2(n)|; 0 for negative n.
  [[nodiscard]] std::int64_t abs(std::int64_t n) const;

 private:
  void fill(const classnum::HurwitzTable& h, const classnum::RepTable& r3);

  std::int64_t limit_;
  std::vector<std::int64_t> values_;
};

}  // namespace m2v::overpart

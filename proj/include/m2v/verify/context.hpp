#pragma once
// Shared read-only tables for the identity checks. Each table is built on
// first use, once, and is safe to read from several threads.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "m2v/arith.hpp"
#include "m2v/classnum.hpp"
#include "m2v/overpart.hpp"
#include "m2v/verify/identity.hpp"

namespace m2v::verify {

struct Limits {
  std::int64_t hurwitz = 0;
  std::int64_t r3 = 0;
  std::int64_t rep = 0;  // 4a^2 + b^2 + c^2 and 4a^2 + 2b^2 + c^2
  std::int64_t divisor = 0;
  std::int64_t alpha2 = 0;

  void widen(const Limits& o);
};

/// Table sizes an identity needs over [.., hi].
Limits limits_for(IdentityId id, std::int64_t hi);

class Context {
 public:
  explicit Context(Limits limits, std::int64_t brute_ceiling = overpart::kDefaultBruteCeiling);

  [[nodiscard]] const Limits& limits() const { return limits_; }
  [[nodiscard]] std::int64_t brute_ceiling() const { return brute_ceiling_; }

  [[nodiscard]] const arith::DivisorTable& divisors() const;
  [[nodiscard]] const classnum::HurwitzTable& hurwitz() const;
  [[nodiscard]] const classnum::RepTable& r3() const;
  [[nodiscard]] const classnum::RepTable& rep_a() const;
  [[nodiscard]] const classnum::RepTable& rep_b() const;
  /// Closed-form alpha2 table; on first use it is cross-checked against
  /// exhaustive enumeration up to the brute-force ceiling and throws
  /// ConsistencyError on any difference.
  [[nodiscard]] const overpart::Alpha2Table& alpha2() const;
  /// Exhaustive alpha2 values on [0, brute_ceiling].
  [[nodiscard]] std::span<const std::int64_t> alpha2_brute() const;

 private:
  Limits limits_;
  std::int64_t brute_ceiling_;

  mutable std::once_flag divisors_once_, hurwitz_once_, r3_once_, rep_a_once_, rep_b_once_, alpha2_once_, brute_once_;
  mutable std::unique_ptr<arith::DivisorTable> divisors_;
  mutable std::unique_ptr<classnum::HurwitzTable> hurwitz_;
  mutable std::unique_ptr<classnum::RepTable> r3_, rep_a_, rep_b_;
  mutable std::unique_ptr<overpart::Alpha2Table> alpha2_;
  mutable std::vector<std::int64_t> brute_;
};

}  // namespace m2v::verify

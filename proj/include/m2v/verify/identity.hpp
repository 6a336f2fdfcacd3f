#pragma once
// Identity catalogue and the records a check produces.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "m2v/rational.hpp"

namespace m2v::verify {

enum class IdentityId {
  prop2,
  cor3,
  prop4,
  cor5i,
  cor5ii,
  cor5iii,
  eichler4n,
  eichler_odd,
  jacobi,
  jacobi_alt,
  lemma7,
  lemma9i,
  lemma9ii,
  remark6_theta,
  remark10_eta,
  remark10_repsums,
  e2A_quasimodular,
  e2B_series,
  inert_primes,
  example12,
  remark13,
  prop1_series,
  eq2_limits,
};

const std::vector<IdentityId>& all_identities();
std::string_view identity_name(IdentityId id);
/// Throws std::invalid_argument for an unknown name.
IdentityId parse_identity(std::string_view name);
/// One-line statement of what the identity asserts.
std::string_view identity_statement(IdentityId id);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Default range of n (or of the prime / the odd argument, per identity).
Range default_range(IdentityId id, std::int64_t brute_ceiling);
/// Largest hi accepted before the request is refused as infeasible.
std::int64_t range_cap(IdentityId id, std::int64_t brute_ceiling);
/// Identities whose domain is a single fixed point and ignore --min/--max.
bool has_fixed_domain(IdentityId id);

/// One exact comparison. pass holds iff residual == 0.
struct IdentityReport {
  IdentityId id;
  std::int64_t n;
  Rational lhs;
  Rational rhs;
  Rational residual;
  bool pass;
  /// Distinguishes several rows at the same n; empty for the main row.
  std::string label;
};

IdentityReport make_report(IdentityId id, std::int64_t n, const Rational& lhs, const Rational& rhs,
                           std::string label = {});

inline constexpr std::string_view kTypoTag = "suspected typo, brute-force value authoritative";

/// A tabulated value that disagrees with the computed one and is recorded
/// instead of failing the run.
struct Discrepancy {
  IdentityId id;
  std::int64_t n;
  std::string what;
  Rational printed;
  Rational computed;
  std::string detail;
  std::string tag{kTypoTag};
};

struct CheckResult {
  std::vector<IdentityReport> reports;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;

  void append(CheckResult&& other);
  [[nodiscard]] std::size_t failures() const;
};

}  // namespace m2v::verify

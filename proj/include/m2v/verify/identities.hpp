#pragma once
// Left- and right-hand sides of every identity and the harness that
// compares them.

#include <cstdint>
#include <span>

#include "m2v/verify/context.hpp"
#include "m2v/verify/identity.hpp"

namespace m2v::verify {

/// Closed-form right-hand side of the main row at n. Throws DomainError when
/// n is outside the identity's domain.
Rational closed_form(const Context& ctx, IdentityId id, std::int64_t n);
/// Independently computed left-hand side of the main row at n.
Rational lhs_value(const Context& ctx, IdentityId id, std::int64_t n);
/// True when n belongs to the identity's domain.
bool in_domain(const Context& ctx, IdentityId id, std::int64_t n);

/// All rows of one identity over the range. Failures are reports, not
/// exceptions; kernels may still throw FeasibilityError.
CheckResult check_identity(const Context& ctx, IdentityId id, Range range);

struct SuiteRequest {
  std::vector<IdentityId> ids;
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  std::int64_t brute_ceiling = overpart::kDefaultBruteCeiling;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Effective range per identity; throws FeasibilityError for ranges above the
/// identity's cap and std::invalid_argument for an inverted range.
Range effective_range(const SuiteRequest& req, IdentityId id);

/// Runs the requested checks, fanned out across worker threads; rows come
/// back ordered by identity and then n.
CheckResult run_suite(const SuiteRequest& req);

/// 0 when every row passes, 1 otherwise. Discrepancies do not count.
int exit_status(const CheckResult& result);

}  // namespace m2v::verify

#include "m2v/verify/context.hpp"

#include <algorithm>
#include <string>

namespace m2v::verify {

void Limits::widen(const Limits& o) {
  hurwitz = std::max(hurwitz, o.hurwitz);
  r3 = std::max(r3, o.r3);
  rep = std::max(rep, o.rep);
  divisor = std::max(divisor, o.divisor);
  alpha2 = std::max(alpha2, o.alpha2);
}

Limits limits_for(IdentityId id, std::int64_t hi) {
  const std::int64_t n = std::max<std::int64_t>(hi, 0);
  Limits l;
  switch (id) {
    case IdentityId::prop2:
    case IdentityId::e2A_quasimodular:
      l.alpha2 = n;
      l.hurwitz = 4 * n;
      l.divisor = n;
      break;
    case IdentityId::cor3:
    case IdentityId::eichler4n:
    case IdentityId::cor5i:
    case IdentityId::inert_primes:
      l.hurwitz = 4 * n;
      l.divisor = n;
      break;
    case IdentityId::prop4:
    case IdentityId::remark13:
    case IdentityId::remark6_theta:
    case IdentityId::prop1_series:
      l.alpha2 = n;
      l.divisor = n;
      break;
    case IdentityId::cor5ii:
      l.hurwitz = 2 * n;
      l.r3 = 2 * n;
      l.divisor = n;
      break;
    case IdentityId::cor5iii:
    case IdentityId::eichler_odd:
    case IdentityId::lemma7:
      l.hurwitz = n;
      l.r3 = n;
      l.divisor = n;
      break;
    case IdentityId::jacobi:
    case IdentityId::jacobi_alt:
      l.r3 = n;
      l.divisor = n;
      break;
    case IdentityId::lemma9i:
      l.rep = 2 * n;
      break;
    case IdentityId::lemma9ii:
      l.rep = n;
      break;
    case IdentityId::remark10_eta:
      l.divisor = n;
      break;
    case IdentityId::remark10_repsums:
      l.rep = 8 * n;
      l.divisor = n;
      break;
    case IdentityId::e2B_series:
      l.r3 = 4 * n;
      l.divisor = n;
      break;
    case IdentityId::example12:
      l.alpha2 = 7;
      l.divisor = 7;
      break;
    case IdentityId::eq2_limits:
      break;
  }
  // alpha2 is built from H and r3 on the same range.
  l.hurwitz = std::max(l.hurwitz, l.alpha2);
  l.r3 = std::max(l.r3, l.alpha2);
  return l;
}

Context::Context(Limits limits, std::int64_t brute_ceiling) : limits_(limits), brute_ceiling_(brute_ceiling) {
  if (brute_ceiling_ < 0 || brute_ceiling_ > overpart::kMaxBruteCeiling) {
    throw FeasibilityError("brute-force ceiling must lie in [0, " + std::to_string(overpart::kMaxBruteCeiling) + "]");
  }
}

const arith::DivisorTable& Context::divisors() const {
  std::call_once(divisors_once_, [&] {
    divisors_ = std::make_unique<arith::DivisorTable>(static_cast<std::uint64_t>(std::max<std::int64_t>(limits_.divisor, 1)));
  });
  return *divisors_;
}

const classnum::HurwitzTable& Context::hurwitz() const {
  std::call_once(hurwitz_once_, [&] { hurwitz_ = std::make_unique<classnum::HurwitzTable>(limits_.hurwitz); });
  return *hurwitz_;
}

const classnum::RepTable& Context::r3() const {
  std::call_once(r3_once_, [&] { r3_ = std::make_unique<classnum::RepTable>(std::array<std::int64_t, 3>{1, 1, 1}, limits_.r3); });
  return *r3_;
}

const classnum::RepTable& Context::rep_a() const {
  std::call_once(rep_a_once_,
                 [&] { rep_a_ = std::make_unique<classnum::RepTable>(std::array<std::int64_t, 3>{4, 1, 1}, limits_.rep); });
  return *rep_a_;
}

const classnum::RepTable& Context::rep_b() const {
  std::call_once(rep_b_once_,
                 [&] { rep_b_ = std::make_unique<classnum::RepTable>(std::array<std::int64_t, 3>{4, 2, 1}, limits_.rep); });
  return *rep_b_;
}

std::span<const std::int64_t> Context::alpha2_brute() const {
  std::call_once(brute_once_, [&] { brute_ = overpart::alpha2_brute_range(brute_ceiling_, brute_ceiling_); });
  return brute_;
}

const overpart::Alpha2Table& Context::alpha2() const {
  std::call_once(alpha2_once_, [&] {
    auto table = std::make_unique<overpart::Alpha2Table>(hurwitz(), r3(), limits_.alpha2);
    const auto brute = alpha2_brute();
    const std::int64_t top = std::min<std::int64_t>(limits_.alpha2, static_cast<std::int64_t>(brute.size()) - 1);
    for (std::int64_t n = 0; n <= top; ++n) {
      if ((*table)(n) != brute[static_cast<std::size_t>(n)]) {
        throw ConsistencyError("alpha2 closed form " + std::to_string((*table)(n)) + " differs from enumeration " +
                               std::to_string(brute[static_cast<std::size_t>(n)]) + " at n = " + std::to_string(n));
      }
    }
    alpha2_ = std::move(table);
  });
  return *alpha2_;
}

}  // namespace m2v::verify

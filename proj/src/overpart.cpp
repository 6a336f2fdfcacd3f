#include "m2v/overpart.hpp"

#include <numeric>
#include <string>

namespace m2v::overpart {
namespace {

// Summary of one partition, enough to assemble the M2-rank of a pair.
struct PartSummary {
  std::int64_t largest;
  std::int64_t parts;
  std::int64_t odd;
};

// Partitions of n with parts <= max_part, distinct or not.
void partitions(std::int64_t n, std::int64_t max_part, bool distinct, std::vector<std::int64_t>& cur,
                const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (n == 0) {
    fn(cur);
    return;
  }
  for (std::int64_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, distinct ? k - 1 : k, distinct, cur, fn);
    cur.pop_back();
  }
}

std::vector<std::vector<PartSummary>> summaries(std::int64_t limit, bool distinct) {
  std::vector<std::vector<PartSummary>> out(static_cast<std::size_t>(limit) + 1);
  std::vector<std::int64_t> cur;
  for (std::int64_t n = 0; n <= limit; ++n) {
    partitions(n, n, distinct, cur, [&](const std::vector<std::int64_t>& p) {
      PartSummary s{p.empty() ? 0 : p.front(), static_cast<std::int64_t>(p.size()), 0};
      for (std::int64_t v : p) s.odd += v % 2;
      out[static_cast<std::size_t>(n)].push_back(s);
    });
  }
  return out;
}

void check_ceiling(std::int64_t n, std::int64_t ceiling) {
  if (ceiling > kMaxBruteCeiling) {
    throw FeasibilityError("brute-force ceiling " + std::to_string(ceiling) + " exceeds the hard cap " +
                           std::to_string(kMaxBruteCeiling));
  }
  if (n > ceiling) {
    throw FeasibilityError("alpha2_brute(" + std::to_string(n) + ") refused: above the brute-force ceiling " +
                           std::to_string(ceiling));
  }
  if (n < 0) throw DomainError("alpha2_brute: negative n");
}

std::int64_t closed_from(std::int64_t n, std::int64_t twelve_h, std::int64_t r3) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  const std::int64_t res = n % 4;
  if (res == 1 || res == 2) {
    if (r3 % 3 != 0) {
      throw ConsistencyError("r3(" + std::to_string(n) + ") = " + std::to_string(r3) + " is not divisible by 3");
    }
    return r3 / 3;
  }
  // 8H(n) - r3(n)/3 = (2 * 12H(n) - r3(n)) / 3.
  if ((2 * twelve_h - r3) % 3 != 0) {
    throw ConsistencyError("8H(" + std::to_string(n) + ") - r3/3 is not an integer");
  }
  const std::int64_t magnitude = (2 * twelve_h - r3) / 3;
  if (magnitude < 0) throw ConsistencyError("negative |alpha2| at n = " + std::to_string(n));
  return -magnitude;
}

}  // namespace

std::int64_t Overpartition::weight() const {
  return std::accumulate(overlined.begin(), overlined.end(), std::int64_t{0}) +
         std::accumulate(plain.begin(), plain.end(), std::int64_t{0});
}

M2Stats m2_stats(const Overpartition& op) {
  M2Stats s;
  const std::int64_t lo = op.overlined.empty() ? 0 : op.overlined.front();
  const std::int64_t lp = op.plain.empty() ? 0 : op.plain.front();
  s.ell = std::max(lo, lp);
  s.nparts = static_cast<std::int64_t>(op.overlined.size() + op.plain.size());
  for (std::int64_t v : op.plain) s.n_odd_plain += v % 2;
  s.chi = (s.ell % 2 == 1 && lp > lo) ? 1 : 0;
  return s;
}

std::int64_t m2_rank(const Overpartition& op) {
  if (op.overlined.empty() && op.plain.empty()) return 0;
  const M2Stats s = m2_stats(op);
  return (s.ell + 1) / 2 - s.nparts + s.n_odd_plain - s.chi;
}

void for_each_overpartition(std::int64_t n, const std::function<void(const Overpartition&)>& fn) {
  if (n < 0) throw DomainError("for_each_overpartition: negative n");
  Overpartition op;
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> p;
  for (std::int64_t n1 = 0; n1 <= n; ++n1) {
    partitions(n1, n1, true, d, [&](const std::vector<std::int64_t>& dist) {
      partitions(n - n1, n - n1, false, p, [&](const std::vector<std::int64_t>& ord) {
        op.overlined = dist;
        op.plain = ord;
        fn(op);
      });
    });
  }
}

std::vector<Overpartition> enumerate_overpartitions(std::int64_t n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

std::vector<std::int64_t> overpartition_numbers(std::int64_t limit) {
  if (limit < 0) throw DomainError("overpartition_numbers: negative limit");
  std::vector<std::int64_t> c(static_cast<std::size_t>(limit) + 1, 0);
  c[0] = 1;
  const auto L = static_cast<std::size_t>(limit);
  for (std::size_t k = 1; k <= L; ++k) {
    // times 1/(1 - x^k)
    for (std::size_t i = k; i <= L; ++i) c[i] = checked_add(c[i], c[i - k]);
    // times (1 + x^k)
    for (std::size_t i = L; i >= k; --i) c[i] = checked_add(c[i], c[i - k]);
  }
  return c;
}

std::vector<std::int64_t> alpha2_brute_range(std::int64_t limit, std::int64_t ceiling) {
  check_ceiling(limit, ceiling);
  const auto dist = summaries(limit, true);
  const auto ord = summaries(limit, false);
  std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t n = 0; n <= limit; ++n) {
    std::int64_t diff = 0;
    for (std::int64_t n1 = 0; n1 <= n; ++n1) {
      for (const PartSummary& d : dist[static_cast<std::size_t>(n1)]) {
        for (const PartSummary& p : ord[static_cast<std::size_t>(n - n1)]) {
          const std::int64_t ell = std::max(d.largest, p.largest);
          const std::int64_t parts = d.parts + p.parts;
          if (parts == 0) {
            ++diff;  // empty overpartition, rank 0
            continue;
          }
          const int chi = (ell % 2 == 1 && p.largest > d.largest) ? 1 : 0;
          const std::int64_t rank = (ell + 1) / 2 - parts + p.odd - chi;
          diff += (rank % 2 == 0) ? 1 : -1;
        }
      }
    }
    out[static_cast<std::size_t>(n)] = diff;
  }
  return out;
}

std::int64_t alpha2_brute(std::int64_t n, std::int64_t ceiling) {
  check_ceiling(n, ceiling);
  return alpha2_brute_range(n, ceiling).back();
}

std::int64_t alpha2_closed(std::int64_t n) {
  if (n < 0) throw DomainError("alpha2_closed: negative n");
  const Rational h = classnum::hurwitz(n) * Rational(12);
  return closed_from(n, h.to_integer(), classnum::r3(n));
}

Alpha2Table::Alpha2Table(std::int64_t limit) : limit_(limit) {
  const classnum::HurwitzTable h(limit);
  const classnum::RepTable r3({1, 1, 1}, limit);
  fill(h, r3);
}

Alpha2Table::Alpha2Table(const classnum::HurwitzTable& h, const classnum::RepTable& r3, std::int64_t limit)
    : limit_(limit) {
  fill(h, r3);
}

void Alpha2Table::fill(const classnum::HurwitzTable& h, const classnum::RepTable& r3) {
  if (limit_ < 0) throw DomainError("Alpha2Table: negative limit");
  values_.resize(static_cast<std::size_t>(limit_) + 1);
  for (std::int64_t n = 0; n <= limit_; ++n) values_[static_cast<std::size_t>(n)] = closed_from(n, h.twelve_h(n), r3(n));
}

std::int64_t Alpha2Table::operator()(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > limit_) {
    throw FeasibilityError("Alpha2Table: argument " + std::to_string(n) + " above limit " + std::to_string(limit_));
  }
  return values_[static_cast<std::size_t>(n)];
}

std::int64_t Alpha2Table::abs(std::int64_t n) const {
  const std::int64_t v = (*this)(n);
  return v < 0 ? -v : v;
}

}  // namespace m2v::overpart

#include "m2v/verify/report.hpp"

#include <map>
#include <ostream>

#include "json.hpp"

namespace m2v::verify {
namespace {

constexpr std::string_view kScopeNote =
    "finite coefficient verification only; the modularity statements behind these identities are not proved here";

std::string describe(const Discrepancy& d) {
  return std::string(identity_name(d.id)) + " n=" + std::to_string(d.n) + " " + d.what + ": printed " + d.printed.str() +
         ", computed " + d.computed.str() + " [" + d.tag + "] " + d.detail;
}

}  // namespace

void write_tsv(std::ostream& os, const CheckResult& result) {
  os << "identity\tn\tlhs\trhs\tresidual\tpass\n";
  for (const auto& r : result.reports) {
    os << identity_name(r.id) << '\t' << r.n << '\t' << r.lhs.str() << '\t' << r.rhs.str() << '\t' << r.residual.str()
       << '\t' << (r.pass ? "true" : "false") << '\n';
  }
  for (const auto& d : result.discrepancies) os << "# discrepancy: " << describe(d) << '\n';
  for (const auto& n : result.notes) os << "# note: " << n << '\n';
  os << "# note: " << kScopeNote << '\n';
}

void write_json(std::ostream& os, const CheckResult& result) {
  auto out = nlohmann::json::array();
  for (const auto& r : result.reports) {
    nlohmann::json j{{"identity", identity_name(r.id)}, {"n", r.n},           {"lhs", r.lhs.str()},
                     {"rhs", r.rhs.str()},             {"residual", r.residual.str()}, {"pass", r.pass}};
    if (!r.label.empty()) j["label"] = r.label;
    out.push_back(std::move(j));
  }
  os << out.dump(1) << '\n';
}

void write_diagnostics(std::ostream& os, const CheckResult& result) {
  for (const auto& d : result.discrepancies) os << "discrepancy: " << describe(d) << '\n';
  std::map<std::string_view, std::pair<std::size_t, std::size_t>> per_id;  // rows, failures
  for (const auto& r : result.reports) {
    auto& c = per_id[identity_name(r.id)];
    ++c.first;
    if (!r.pass) ++c.second;
  }
  for (const auto& r : result.reports) {
    if (!r.pass) {
      os << "FAIL " << identity_name(r.id) << " n=" << r.n << (r.label.empty() ? "" : " [" + r.label + "]")
         << " lhs=" << r.lhs.str() << " rhs=" << r.rhs.str() << '\n';
    }
  }
  for (const auto& [id, c] : per_id) os << id << ": " << c.first << " rows, " << c.second << " failed\n";
  os << result.reports.size() << " rows, " << result.failures() << " failed, " << result.discrepancies.size()
     << " discrepancies\n"
     << kScopeNote << '\n';
}

}  // namespace m2v::verify

// Command-line front end for the identity suite.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "m2v/rational.hpp"
#include "m2v/verify/identities.hpp"
#include "m2v/verify/report.hpp"

using namespace m2v;

int main(int argc, char** argv) {
  CLI::App app{"exact verification of overpartition rank identities"};
  std::vector<std::string> ids;
  std::optional<std::int64_t> min_n, max_n;
  std::int64_t ceiling = overpart::kDefaultBruteCeiling;
  std::string format = "tsv", out_path;
  unsigned workers = 0;
  bool list = false;
  app.add_option("--identity", ids, "identities to check (default: all)")->delimiter(',');
  app.add_option("--min", min_n, "lower end of n");
  app.add_option("--max", max_n, "upper end of n");
  app.add_option("--brute-ceiling", ceiling, "enumeration ceiling for overpartitions")
      ->check(CLI::Range(std::int64_t{0}, static_cast<std::int64_t>(overpart::kMaxBruteCeiling)));
  app.add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--out", out_path, "write reports here instead of stdout");
  app.add_option("--workers", workers, "worker threads (0 = hardware)");
  app.add_flag("--list", list, "print identity ids and statements");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (list) {
    for (auto id : verify::all_identities()) std::cout << verify::identity_name(id) << '\t' << verify::identity_statement(id) << '\n';
    return 0;
  }

  try {
    verify::SuiteRequest req;
    if (ids.empty()) {
      req.ids = verify::all_identities();
    } else {
      for (const auto& s : ids) req.ids.push_back(verify::parse_identity(s));
    }
    req.min = min_n;
    req.max = max_n;
    req.brute_ceiling = ceiling;
    req.workers = workers;
    const auto result = verify::run_suite(req);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::invalid_argument("cannot open " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (format == "json") {
      verify::write_json(os, result);
    } else {
      verify::write_tsv(os, result);
    }
    verify::write_diagnostics(std::cerr, result);
    return verify::exit_status(result);
  } catch (const FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

#pragma once

#include <iosfwd>

#include "m2v/verify/identity.hpp"

namespace m2v::verify {

/// identity, n, lhs, rhs, residual, pass; then discrepancies and notes as
/// '#' comment lines.
void write_tsv(std::ostream& os, const CheckResult& result);
/// Array of report objects; a "label" field appears on labelled rows.
void write_json(std::ostream& os, const CheckResult& result);
/// Human-readable discrepancy and summary lines.
void write_diagnostics(std::ostream& os, const CheckResult& result);

}  // namespace m2v::verify

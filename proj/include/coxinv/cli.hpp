#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxinv::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --out file), errors as {"error": ...} to `err`.
/// Returns 0 when every check passes, 1 when a check fails and 2 for usage
/// or descriptor errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxinv::cli

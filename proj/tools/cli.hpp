#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glmn::cli {

/// Runs one command line (without the program name). JSON goes to `out`
/// (or to the `--out` file), diagnostics to `err`.
/// Exit codes: 0 success, 1 verification failure or asserted irreducibility
/// that does not hold, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glmn::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcx::cli {

/// Runs one command line (without the program name). Reports go to --out or
/// to `out`; diagnostics go to `err`. Returns the process exit status:
/// 0 success, 1 I/O, parse or resource error, 2 invariant violation,
/// 3 hypothesis rejection.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcx::cli

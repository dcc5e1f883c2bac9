#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svdim::cli {

enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kInvalidParameters = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svdim::cli

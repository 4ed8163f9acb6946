#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mucos::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2, kNoConvergence = 3 };

// Full command line including argv[0]. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mucos::cli

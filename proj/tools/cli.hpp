#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polytot::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one command line (without the program name), writing results to out
// and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytot::cli

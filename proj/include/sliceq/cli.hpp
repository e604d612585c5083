#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sliceq {

/// Exit codes of `run`.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs one command line (without the program name), writing JSON or CSV to
/// `out`. Errors are reported as {"error": {...}} objects on `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace sliceq

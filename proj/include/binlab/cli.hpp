#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binlab {

/// Exit statuses of the command-line front end.
enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kInternalError = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binlab

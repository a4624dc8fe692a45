#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cyclefam::cli {

/// Exit codes: 0 verified/success, 1 usage or input error, 2 a checked
/// property does not hold.
enum ExitCode : int { kOk = 0, kInputError = 1, kPropertyFails = 2 };

/// Runs the command line `args` (args[0] is the program name), writing the
/// payload to `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclefam::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infothermo::cli {

/// Overrides the default precision cap (bits) when set.
inline constexpr const char* kPrecisionEnv = "INFOTHERMO_PRECISION_BITS";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infothermo::cli

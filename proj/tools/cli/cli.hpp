#pragma once

#include <ostream>
#include <span>
#include <string>

namespace endhered::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (args[0] is the program name). Results go to out,
/// diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace endhered::cli

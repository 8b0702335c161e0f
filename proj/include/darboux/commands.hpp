#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace darboux {

/// Exit codes of run_command.
enum ExitCode : int { kSuccess = 0, kValidationError = 2, kVerificationFailure = 3 };

/// Runs one CLI invocation (arguments without the program name). The report
/// goes to `out` as text, or as one JSON document with --json; diagnostics go
/// to `err`. A leading system name without a subcommand means `darboux`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darboux

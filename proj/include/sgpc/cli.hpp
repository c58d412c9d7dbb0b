#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgpc {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitUsage = 2 };

/// Runs one command. `args` excludes the program name. Returns 0 on success
/// or a true answer, 1 on a false answer, a rejection or an internal failure,
/// and 2 on usage, parse or precondition errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgpc

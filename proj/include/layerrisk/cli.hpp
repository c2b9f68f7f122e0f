#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layerrisk {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitParse = 2, kExitUsage = 3 };

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace layerrisk

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comaj::cli {

enum ExitCode : int { ok = 0, identity_violation = 1, usage_error = 2 };

/// Runs one command line (without the program name). Reports and tables go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comaj::cli

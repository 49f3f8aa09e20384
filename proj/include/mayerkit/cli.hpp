#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mayer::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, numeric_failure = 3 };

/// Runs the command line front end. Reports go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mayer::cli

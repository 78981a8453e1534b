#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullkit {

/// Exit codes of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitTheorem = 3 };

/// Runs `nullkit` with `args` (program name excluded). JSON results go to
/// `out`, diagnostics to `err`; `in` is read when no --in file is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nullkit

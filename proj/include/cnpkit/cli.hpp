#pragma once

// Command-line front end. The executable is a thin wrapper so that tests can
// drive every subcommand in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace cnpkit::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kGuard = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnpkit::cli

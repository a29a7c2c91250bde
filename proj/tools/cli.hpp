#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3iso::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3iso::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symwalk::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidArguments = 2,
  kResourceGuard = 3,
};

inline constexpr const char* kSchemaVersion = "1";

/// Runs the tool with argv[1..]; numeric output goes to `out` (unless
/// --out names a file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symwalk::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
};

/// Parses argv, runs one subcommand and writes its report to `out`
/// (diagnostics to `err`). Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Data directory: SUMFREE_DATA_DIR if set, else the build-time default.
std::string default_data_dir();

}  // namespace sumfree::cli

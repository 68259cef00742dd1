#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbrokit::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUnknown = 2,
  kUsage = 64,
  kInvalidInput = 65,
  /// A theorem-backed construction failed (a bug or a broken precondition).
  kInternal = 70,
};

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sbrokit::cli

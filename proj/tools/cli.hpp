#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icgr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kDifferences = 2,
};

/// Runs one icgr invocation. `args` excludes the program name. Payload goes
/// to `out` when "-" is used as output, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace icgr::cli

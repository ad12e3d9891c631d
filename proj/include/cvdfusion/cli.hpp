#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cvdfusion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,  // validation, schema, or other domain failure
  kIoError = 2,
  kUsageError = 3,
};

/// Runs one `cvdfuse` invocation. `args` excludes the program name.
/// Reports go to `out` as JSON; failures go to `err` as one JSON object per
/// line with at least "error" and "message" keys.
int run_command(std::span<const std::string> args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace cvdfusion::cli

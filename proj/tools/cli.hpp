#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combspec::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kSizeGuard = 4,
  kTimeout = 5,
  kDisagreement = 6,
  kInternal = 7,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Graph text named "-" or omitted is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace combspec::cli

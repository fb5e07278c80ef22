#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefalloc::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kInputError = 2, kUnsupported = 3, kTooLarge = 4 };

/// Runs one command. `args` excludes the program name. An instance or
/// source path of "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace prefalloc::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace malg::cli {

enum ExitCode { pass = 0, fail = 1, usage = 2, cap = 3 };

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to `out`, usage errors and help to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace malg::cli

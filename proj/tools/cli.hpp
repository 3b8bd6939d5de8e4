#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobalg::cli {

/// Exit codes: 0 success, 1 invariant or verification failure, 2 invalid input.
enum ExitCode : int { ok = 0, failure = 1, invalid_input = 2 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frobalg::cli

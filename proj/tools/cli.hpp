#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdg::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kError = 2 };

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdg::cli

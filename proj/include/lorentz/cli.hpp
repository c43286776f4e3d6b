#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::cli {

enum ExitCode : int { kOk = 0, kMalformed = 1, kRejected = 2, kNumerical = 3 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli

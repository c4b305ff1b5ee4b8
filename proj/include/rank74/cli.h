#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rank74::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2 };

// Runs one command. args excludes the program name, e.g.
// {"parity", "--builtin", "V_0", "--json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rank74::cli

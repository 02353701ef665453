#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rnf::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadInput = 2 };

/// Runs one command line (without the program name). Reports go to `out` as
/// JSON; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace rnf::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbasis::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kInvalidInput = 2,
    kOracleMismatch = 3,
};

/// Runs the command line `args` (args[0] is the program name). The result
/// document goes to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbasis::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqclan::cli {

enum ExitCode : int {
    Ok = 0,
    ParseFailure = 1,
    NotPqPairExit = 2,
    IncomparableExit = 3,
    VerifyMismatch = 4,
};

/// Runs the tool on `args` (without the program name). Everything goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqclan::cli

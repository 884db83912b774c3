#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srcdec::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kBudgetExceeded = 2,
    kVerificationFailed = 3,
    kInternalFailure = 4,
};

/// Runs one command line. `args` excludes the program name, e.g.
/// {"decompose", "ex5_1.sys", "--format", "json"}. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srcdec::cli

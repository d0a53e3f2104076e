#pragma once

#include <iosfwd>

namespace hpade::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kInsufficientOrder = 3,
    kDegenerate = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hpade::cli

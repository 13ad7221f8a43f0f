#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcube::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kParse = 3,
    kCap = 4,
    kIo = 5,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hcube::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlo::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailed = 2, kUsage = 64 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlo::cli

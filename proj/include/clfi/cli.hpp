#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clfi::cli {

/// Exit codes: 0 success / property holds, 1 property fails, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clfi::cli

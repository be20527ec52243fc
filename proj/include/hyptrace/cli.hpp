#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyptrace::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitMalformedInput = 2;

/// Runs one command. `args` excludes the program name. JSON input is read from
/// the file named by the positional argument, or from `in` when absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hyptrace::cli

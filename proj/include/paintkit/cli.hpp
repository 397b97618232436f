#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paintkit::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRejected = 2;
inline constexpr int kCapExceeded = 3;
inline constexpr int kInputError = 4;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace paintkit::cli

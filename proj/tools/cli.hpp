#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resistor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Runs `resistor <subcommand> ...`; args excludes the program name.
/// Results go to `out`, human summaries and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resistor::cli

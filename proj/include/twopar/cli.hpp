#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace twopar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDistinguished = 1;
inline constexpr int kExitUsage = 2;

/// Runs `twopar <subcommand> ...`. args[0] is the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twopar::cli

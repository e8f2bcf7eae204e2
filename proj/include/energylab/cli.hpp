#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace energylab::cli {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable or malformed files
inline constexpr int kExitDomain = 2;  // domain, pole and other library errors

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace energylab::cli

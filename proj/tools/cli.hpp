#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solidcyl::cli
{
// Exit codes
inline constexpr int kSuccess = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

// One axis of a table grid: explicit list "a,b,c" or range
// "start:stop:count[:lin|log]"
std::vector<double> parse_axis(std::string const& spec);

// Run the command line (args excludes the program name)
int run(std::vector<std::string> const& args,
        std::ostream& out,
        std::ostream& err);
}  // namespace solidcyl::cli

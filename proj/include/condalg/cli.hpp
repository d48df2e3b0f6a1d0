#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condalg {

/// Exit statuses of run_cli.
namespace exit_status {
inline constexpr int ok = 0;
inline constexpr int negative = 1; // not equivalent, or an axiom instance failed
inline constexpr int usage = 2;
inline constexpr int budget = 3;
} // namespace exit_status

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace condalg

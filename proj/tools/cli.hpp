#ifndef DESCENT_TOOLS_CLI_HPP
#define DESCENT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace descent::cli {

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;

/// Entry point behind the `descent` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent::cli

#endif  // DESCENT_TOOLS_CLI_HPP

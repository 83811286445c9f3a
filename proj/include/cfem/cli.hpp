#ifndef CFEM_CLI_HPP
#define CFEM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cfem::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Runs the command line `args` (program name excluded). Normal output goes
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfem::cli

#endif

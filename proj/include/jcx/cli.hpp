#ifndef JCX_CLI_HPP_
#define JCX_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace jcx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitUnsupportedClass = 3;
inline constexpr int kExitNumericalBudget = 4;

/// Runs the jcx command line (subcommands measure, asym, sweep, lmc-compare,
/// rule). `args` excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcx

#endif  // JCX_CLI_HPP_

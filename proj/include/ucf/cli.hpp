#ifndef UCF_CLI_HPP
#define UCF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ucf::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,            ///< success, every check passed
    exit_check_failed = 1,  ///< a bound or decomposition property failed
    exit_usage = 2,         ///< bad flags or unreadable/invalid input
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucf::cli

#endif  // UCF_CLI_HPP

#ifndef PALSTAR_TOOLS_CLI_HPP
#define PALSTAR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace palstar::cli {

/// Exit statuses of the palstar tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,   // bad flags, bad config, malformed input, failed verify
  kNotAPalstar = 2,  // domain rejection
  kLimitExceeded = 3,
};

/// Runs the tool with args (without the program name), writing results to
/// out and diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace palstar::cli

#endif  // PALSTAR_TOOLS_CLI_HPP

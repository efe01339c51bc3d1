#ifndef BETAMAPS_TOOLS_CLI_HPP_
#define BETAMAPS_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace betamaps::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Objects not given
/// as flags are read from `in`, one per line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace betamaps::cli

#endif  // BETAMAPS_TOOLS_CLI_HPP_

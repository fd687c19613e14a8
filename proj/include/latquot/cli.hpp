#ifndef LATQUOT_CLI_HPP
#define LATQUOT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace latquot::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kCheckFailed = 2,
  kSizeLimit = 3,
};

/// Runs one `latquot` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latquot::cli

#endif  // LATQUOT_CLI_HPP

#ifndef HYPERNORM_TOOLS_CLI_HPP_
#define HYPERNORM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hypernorm::cli {

  enum ExitCode {
    exit_ok        = 0,
    exit_violation = 1,  // a law verdict outside the expectation matrix
    exit_usage     = 2,  // bad flags, unreadable or invalid input
  };

  // Runs the command line `args` (without the program name). Input named
  // "-" is read from `in`.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace hypernorm::cli

#endif  // HYPERNORM_TOOLS_CLI_HPP_

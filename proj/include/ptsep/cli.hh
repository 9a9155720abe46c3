/* cli.hh -- the ptsep command-line front end.
 *
 * Exit codes: 0 success or separable, 1 not separable (decide) or failed verification
 * (separator, audit), 2 input error, 3 resource limit, 4 undecided.
 */

#ifndef PTSEP_CLI_HH_
#define PTSEP_CLI_HH_

#include <ostream>
#include <string>
#include <vector>

namespace ptsep::cli {

enum ExitCode : int {
    success = 0,
    negative = 1,
    input_error = 2,
    resource_limit = 3,
    undecided = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptsep::cli

#endif // PTSEP_CLI_HH_

#ifndef SYNKIT_CLI_HPP
#define SYNKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace synkit {

/// Dispatches one CLI invocation. Returns the process exit status:
/// 0 completed analysis, 2 parse/usage error, 3 precondition violation,
/// 4 budget exhaustion, 1 unexpected failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synkit

#endif  // SYNKIT_CLI_HPP

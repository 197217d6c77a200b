#ifndef LPA_CLI_HPP
#define LPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Runs one CLI invocation; args excludes the program name. All output is
/// deterministic. Returns 0 on success, 1 on a domain error (bad graph,
/// bad expression, violated precondition), 2 on a usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli

#endif

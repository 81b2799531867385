#ifndef INVOP_CLI_HH
#define INVOP_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace invop {

// Runs one CLI invocation (argv without the program name). Reports go to
// `out`, diagnostics to `err`. Exit code: 0 all checks passed, 1 a check
// failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invop

#endif

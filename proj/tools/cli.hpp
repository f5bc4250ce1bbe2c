#ifndef PADIC_TOOLS_CLI_HPP
#define PADIC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

// Full command dispatch, in-process. `args` excludes the program name.
// Returns the process exit code: 0 success, 1 domain error, 2 parse error.
// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace padic::cli

#endif

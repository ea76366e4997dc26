#ifndef GRUNDY_CLI_HPP
#define GRUNDY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace grundy {

/// Command-line front end, callable in-process so tests can drive the exact
/// command surface. `args` excludes the program name.
/// Exit codes: 0 success / zero mismatches, 1 unexpected verification
/// mismatches, 2 usage or invariant error, 3 resource budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace grundy

#endif  // GRUNDY_CLI_HPP

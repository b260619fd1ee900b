#ifndef DG2_CLI_HPP
#define DG2_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dg2 {

/// Runs the command line `args` (without the program name). Returns the
/// exit code: 0 success, 1 check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dg2

#endif  // DG2_CLI_HPP

#ifndef NSRING_CLI_HPP_
#define NSRING_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nsring {

/// Runs the command-line front end. Exit codes: 0 success, 1 mathematical
/// fail in verify (or a theorem-backed internal check tripping), 2 usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nsring

#endif  // NSRING_CLI_HPP_

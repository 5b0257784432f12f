#ifndef NEKRASOV_CLI_CLI_HPP
#define NEKRASOV_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nekrasov::cli {

/// Exit statuses shared by every command.
enum ExitStatus : int {
  kOk = 0,             // all certified and passing
  kViolation = 1,      // a verified violation of an asserted property
  kUncertified = 2,    // uncertified, aborted or rejected computation
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nekrasov::cli

#endif  // NEKRASOV_CLI_CLI_HPP

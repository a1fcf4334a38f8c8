// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_CLI_HPP_
#define NSEXACT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nsexact {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerificationFailed = 2,
  kExitUnclassifiable = 3,
};

/// args[0] is the program name. Subcommands: list, sample, verify, classify,
/// blowup, holder, liouville, euler-solve, pressure-recover.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsexact

#endif  // NSEXACT_CLI_HPP_

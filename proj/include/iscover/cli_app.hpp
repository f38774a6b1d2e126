#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iscover {

// Exit codes: 0 ok, 1 usage/input error, 2 infeasible run or failed
// verification. Subcommands: solve, experiment, verify, gen-instance,
// gen-class.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace iscover

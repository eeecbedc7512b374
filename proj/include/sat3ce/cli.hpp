#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sat3ce {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalid = 2,    // parse or validation failure
  kExitInfeasible = 3, // no 3CE tailoring for the requested parameters
  kExitBudget = 4,     // annealing budget exhausted without reaching target
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::vector<std::string> artifacts;
};

/// Runs one subcommand. `args` excludes the program name. Machine-readable
/// results go to `out`; diagnostics (`warning: ...`, `error: <code>: ...`)
/// go to `err`. CNF input named "-" is read from `in`.
CommandOutcome run_cli(const std::vector<std::string> &args, std::istream &in,
                       std::ostream &out, std::ostream &err);

} // namespace sat3ce

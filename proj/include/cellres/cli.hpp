#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellres {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalseVerdict = 1, kExitInputError = 2 };

struct CliOutcome {
  int exit_code = kExitOk;
  std::string output;  // JSON document, newline-terminated
};

/// Runs one subcommand. `args` excludes the program name; `input` is read
/// when no --input file is given. Never throws for bad input: errors become
/// a JSON error report with exit code 2.
CliOutcome run_cli(const std::vector<std::string>& args, std::istream& input);

}  // namespace cellres

#include "cellres/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const cellres::CliOutcome outcome = cellres::run_cli(args, std::cin);
  std::cout << outcome.output;
  return outcome.exit_code;
}

#include <cstdio>
#include <string>
#include <vector>

#include "afsa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  afsa::cli::CommandOutcome outcome = afsa::cli::run(args);
  std::fputs(outcome.out.c_str(), stdout);
  std::fputs(outcome.err.c_str(), stderr);
  return outcome.exit_code;
}

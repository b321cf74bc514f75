#pragma once

#include <string>
#include <vector>

#include "afsa/frame_io.hpp"
#include "afsa/framework.hpp"

namespace afsa::cli {

struct CommandOutcome {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 usage/parse error
  std::string out;
  std::string err;
};

/// Dispatches the afsa subcommands (enumerate, encode, solve, transform,
/// check-equivalence) without touching the process: stdout/stderr text is
/// captured in the outcome. Byte-identical for identical argv+input+seed.
CommandOutcome run(const std::vector<std::string>& argv);

struct EquivalenceReport {
  bool pass = false;
  std::string text;  // PASS/FAIL line plus any witnesses
  long long labellings = 0;
};

/// Thm-style oracle comparison between two labelling sets (the complete
/// enumeration and the encoded-formula models).
EquivalenceReport equivalence_report(const std::vector<Labelling3>& complete,
                                     const std::vector<Labelling3>& models);

/// Runs the oracle comparison on one framework.
EquivalenceReport check_equivalence(const Framework& framework, long long cap);

}  // namespace afsa::cli

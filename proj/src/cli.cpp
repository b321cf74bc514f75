#include "afsa/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "afsa/encoder.hpp"
#include "afsa/equations.hpp"
#include "afsa/errors.hpp"
#include "afsa/semantics.hpp"
#include "afsa/transform.hpp"
#include "json.hpp"

namespace afsa::cli {

namespace {

constexpr long long kDefaultCap = 4782969;  // 3^14

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Family family_from_system(const std::string& system) {
  if (system == "eqG") return Family::godel;
  if (system == "eqP") return Family::product;
  return Family::lukasiewicz;  // eqL
}

std::string system_from_family(Family f) {
  switch (f) {
    case Family::godel: return "eqG";
    case Family::product: return "eqP";
    case Family::lukasiewicz: return "eqL";
  }
  return "?";
}

struct SolveArgs {
  std::string input;
  std::string system;
  std::string algebra;
  bool three_valued = false;
  long long cap = kDefaultCap;
  SolveConfig config;
};

int run_solve(const SolveArgs& args, std::ostream& out) {
  Family family;
  if (!args.system.empty() && !args.algebra.empty()) {
    Family from_alg = args.algebra == "godel"     ? Family::godel
                      : args.algebra == "product" ? Family::product
                                                  : Family::lukasiewicz;
    family = family_from_system(args.system);
    if (from_alg != family)
      throw DomainError("--system " + args.system + " conflicts with --algebra " +
                        args.algebra);
  } else if (!args.system.empty()) {
    family = family_from_system(args.system);
  } else if (!args.algebra.empty()) {
    family = args.algebra == "godel"     ? Family::godel
             : args.algebra == "product" ? Family::product
                                         : Family::lukasiewicz;
  } else {
    family = Family::godel;
  }

  Framework framework = parse_frame(read_input(args.input));
  EquationSystem system = build_system(framework, algebra_for(family));

  if (args.three_valued) {
    auto solutions = enumerate_3valued_solutions(system, args.cap);
    out << write_labellings(solutions, LabellingMode::three_valued);
    return 0;
  }

  SolveResult result = solve_fixed_point(system, args.config);
  nlohmann::json obj;
  obj["system"] = system_from_family(family);
  obj["status"] = result.status == SolveStatus::converged ? "converged" : "failed";
  obj["residual"] = result.residual;
  obj["iterations"] = result.iterations;
  obj["restart"] = result.restart;
  nlohmann::json assignment = nlohmann::json::object();
  for (const auto& [name, v] : result.assignment)
    assignment[name] = format_real(v);
  obj["assignment"] = assignment;
  out << obj.dump() << "\n";
  return result.status == SolveStatus::converged ? 0 : 1;
}

}  // namespace

EquivalenceReport equivalence_report(const std::vector<Labelling3>& complete,
                                     const std::vector<Labelling3>& models) {
  std::set<Labelling3> lhs(complete.begin(), complete.end());
  std::set<Labelling3> rhs(models.begin(), models.end());

  EquivalenceReport report;
  report.labellings = static_cast<long long>(lhs.size());
  if (lhs == rhs) {
    report.pass = true;
    report.text = "PASS complete≡PL3 models (" + std::to_string(lhs.size()) +
                  (lhs.size() == 1 ? " labelling)" : " labellings)");
    return report;
  }
  report.pass = false;
  std::ostringstream text;
  std::vector<Labelling3> only_complete, only_models;
  for (const auto& lab : lhs)
    if (!rhs.count(lab)) only_complete.push_back(lab);
  for (const auto& lab : rhs)
    if (!lhs.count(lab)) only_models.push_back(lab);
  text << "FAIL complete≢PL3 models ("
       << only_complete.size() + only_models.size() << " discrepancies)\n";
  for (const auto& lab : only_complete)
    text << "only-complete "
         << write_labellings({lab}, LabellingMode::three_valued);
  for (const auto& lab : only_models)
    text << "only-formula "
         << write_labellings({lab}, LabellingMode::three_valued);
  report.text = text.str();
  return report;
}

EquivalenceReport check_equivalence(const Framework& framework, long long cap) {
  auto complete = enumerate_complete(framework, cap);
  auto models = enumerate_models3(encode(framework).formula, cap);
  return equivalence_report(complete, models);
}

CommandOutcome run(const std::vector<std::string>& argv) {
  CommandOutcome outcome;
  std::ostringstream out;

  CLI::App app{"argumentation frameworks with set attackers"};
  app.require_subcommand(1);

  std::string enum_input, enum_semantics = "complete";
  long long enum_cap = kDefaultCap;
  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate complete labellings");
  cmd_enum->add_option("input", enum_input, "frame document path or - for stdin")
      ->required();
  cmd_enum->add_option("--semantics", enum_semantics, "labelling semantics")
      ->check(CLI::IsMember({"complete"}));
  cmd_enum->add_option("--cap", enum_cap, "max assignments to enumerate");

  std::string encode_input;
  auto* cmd_encode = app.add_subcommand("encode", "print the encoded formula");
  cmd_encode->add_option("input", encode_input, "frame document path or - for stdin")
      ->required();

  SolveArgs solve_args;
  auto* cmd_solve = app.add_subcommand("solve", "solve the equational system");
  cmd_solve->add_option("input", solve_args.input, "frame document path or - for stdin")
      ->required();
  cmd_solve->add_option("--system", solve_args.system, "equational system")
      ->check(CLI::IsMember({"eqG", "eqP", "eqL"}));
  cmd_solve->add_option("--algebra", solve_args.algebra, "evaluation algebra")
      ->check(CLI::IsMember({"godel", "product", "lukasiewicz"}));
  cmd_solve->add_flag("--three-valued", solve_args.three_valued,
                      "enumerate exact {0,1/2,1} solutions instead of solving");
  cmd_solve->add_option("--tol", solve_args.config.tolerance, "residual tolerance");
  cmd_solve->add_option("--max-iter", solve_args.config.max_iterations,
                        "iteration limit per restart");
  cmd_solve->add_option("--damping", solve_args.config.damping,
                        "restart-0 damping factor");
  cmd_solve->add_option("--restarts", solve_args.config.restarts, "extra restarts");
  cmd_solve->add_option("--seed", solve_args.config.seed, "random seed");
  cmd_solve->add_option("--cap", solve_args.cap, "cap for --three-valued");

  std::string transform_input, transform_to = "setaf";
  auto* cmd_transform = app.add_subcommand("transform", "rewrite as a SETAF");
  cmd_transform
      ->add_option("input", transform_input, "frame document path or - for stdin")
      ->required();
  cmd_transform->add_option("--to", transform_to, "target kind")
      ->check(CLI::IsMember({"setaf"}));

  std::string check_input;
  long long check_cap = kDefaultCap;
  auto* cmd_check = app.add_subcommand(
      "check-equivalence", "compare complete labellings with PL3 models");
  cmd_check->add_option("input", check_input, "frame document path or - for stdin")
      ->required();
  cmd_check->add_option("--cap", check_cap, "max assignments to enumerate");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    outcome.out = app.help();
    outcome.exit_code = 0;
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.err = std::string(e.what()) + "\n" + app.help();
    outcome.exit_code = 2;
    return outcome;
  }

  try {
    if (cmd_enum->parsed()) {
      Framework f = parse_frame(read_input(enum_input));
      out << write_labellings(enumerate_complete(f, enum_cap),
                              LabellingMode::three_valued);
    } else if (cmd_encode->parsed()) {
      EncodedFrame enc = encode(parse_frame(read_input(encode_input)));
      out << enc.formula.pretty() << "\n";
      out << "vars:";
      for (const auto& v : enc.variables) out << " " << v;
      out << "\n";
    } else if (cmd_solve->parsed()) {
      outcome.exit_code = run_solve(solve_args, out);
    } else if (cmd_transform->parsed()) {
      TransformResult result = to_setaf(parse_frame(read_input(transform_input)));
      out << serialize_frame(result.setaf);
      nlohmann::json mapping(result.mapping);
      out << "# mapping " << mapping.dump() << "\n";
    } else if (cmd_check->parsed()) {
      EquivalenceReport report =
          check_equivalence(parse_frame(read_input(check_input)), check_cap);
      out << report.text;
      if (report.pass && report.text.back() != '\n') out << "\n";
      outcome.exit_code = report.pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    outcome.err = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = 2;
    outcome.out = out.str();
    return outcome;
  } catch (const DomainError& e) {
    outcome.err = std::string("error: ") + e.what() + "\n";
    outcome.exit_code = 1;
    outcome.out = out.str();
    return outcome;
  }

  outcome.out = out.str();
  return outcome;
}

}  // namespace afsa::cli

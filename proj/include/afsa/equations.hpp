#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "afsa/frame_io.hpp"
#include "afsa/framework.hpp"
#include "afsa/fuzzy.hpp"

namespace afsa {

struct SolveConfig {
  double tolerance = 1e-9;
  int max_iterations = 100000;
  double damping = 1.0;  // restart 0; odd restarts fall back to 0.5
  int restarts = 8;
  std::uint64_t seed = 0;
};

enum class SolveStatus { converged, failed };

struct SolveResult {
  SolveStatus status = SolveStatus::failed;
  AssignmentR assignment;  // populated when converged
  double residual = 1.0;
  int iterations = 0;
  int restart = 0;
};

// Per-element fixed-point system x_beta = F_beta(x) over the labellable
// elements. F_beta composes an outer function h over per-attacker inner
// functions h_i; each inner input vector is [attack value, member values...]
// ([members...] for SETAF). Unattacked elements are constant 1.
class EquationSystem {
 public:
  using VecFn = std::function<double(std::span<const double>)>;

  struct Group {
    int attack_slot = -1;  // -1 when the attack itself is not labellable
    std::vector<int> member_slots;
  };

  EquationSystem(std::vector<std::string> variables, Family family, Kind kind,
                 std::vector<std::vector<Group>> groups);

  const std::vector<std::string>& variables() const { return variables_; }
  Family family() const { return family_; }
  Kind kind() const { return kind_; }
  const std::vector<std::vector<Group>>& groups() const { return groups_; }

  double apply(int var, std::span<const double> x) const;
  void apply_all(std::span<const double> x, std::span<double> out) const;
  double residual_of(std::span<const double> x) const;

  /// The tuple components: h over group values, h_i over one group's inputs.
  double outer(std::span<const double> group_values) const;
  double inner(std::span<const double> group_inputs) const;

  /// Copy with replaced tuple functions (negative controls in tests).
  EquationSystem with_tuple_ops(VecFn outer, VecFn inner) const;

  /// Exact evaluation on the {0, 1/2, 1} grid in halves. Only the standard
  /// Godel family supports this path.
  int apply_halves(int var, std::span<const int> x) const;
  bool exact_three_valued() const;

 private:
  std::vector<std::string> variables_;
  Family family_;
  Kind kind_;
  std::vector<std::vector<Group>> groups_;
  VecFn custom_outer_;
  VecFn custom_inner_;
};

EquationSystem build_system(const Framework& framework, const Algebra& algebra);

/// Infinity-norm deviation max |x_beta - F_beta(x)|.
double residual(const EquationSystem& system, const AssignmentR& assignment);

/// Damped multi-start fixed-point iteration x <- (1-lambda) x + lambda F(x).
/// Restart 0 starts from all-1/2 with the configured damping; restart 1 from
/// all-1/2 with damping 0.5; later restarts draw seeded-uniform starts and
/// alternate the two damping values. Never throws on failure.
SolveResult solve_fixed_point(const EquationSystem& system,
                              const SolveConfig& config = {});

/// Samples the real-equation-function-tuple axioms: h(1..1)=1 and h_i(1..1)=0,
/// zero insertions force h=0 and h_i=1, and both are permutation invariant.
ValidationReport validate_tuple_axioms(const EquationSystem& system,
                                       int samples, std::uint64_t seed);

/// 0 -> 0, 1 -> 1, interior -> 1/2; values within 1e-9 of an endpoint snap.
Labelling3 ternarize(const AssignmentR& assignment);

/// All {0, 1/2, 1} assignments with residual exactly zero (exact grid
/// arithmetic for Godel, doubles with a zero-residual requirement otherwise).
std::vector<Labelling3> enumerate_3valued_solutions(const EquationSystem& system,
                                                    long long cap);

}  // namespace afsa

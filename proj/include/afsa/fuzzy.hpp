#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "afsa/formula.hpp"

namespace afsa {

using AssignmentR = std::map<std::string, double>;

enum class Family { godel, lukasiewicz, product };

std::string family_name(Family f);

// A [0,1] evaluation algebra: standard negation, a continuous t-norm and its
// residual implication. The conorm is the dual of the t-norm.
struct Algebra {
  Family family;

  double neg(double x) const { return 1.0 - x; }
  double tnorm(double x, double y) const;
  double conorm(double x, double y) const;
  /// Residuum sup{z | T(x,z) <= y}; returns exactly 1 when x <= y.
  double implication(double x, double y) const;
};

Algebra algebra_for(Family family);

double eval_fuzzy(const Formula& formula, const AssignmentR& assignment,
                  const Algebra& algebra);

/// Same evaluation with variables bound positionally to `values` via `order`.
double eval_fuzzy_ordered(const Formula& formula,
                          std::span<const std::string> order,
                          std::span<const double> values,
                          const Algebra& algebra);

/// n-ary Lukasiewicz t-norm: 0 when the sum is at most n-1, else sum - n + 1.
double luk_nary_closed_form(std::span<const double> xs);

/// Residuum of the family's t-norm; validates the [0,1] range.
double implication_value(const Algebra& algebra, double x, double y);

}  // namespace afsa

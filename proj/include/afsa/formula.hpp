#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "afsa/tri.hpp"

namespace afsa {

// Total 3-valued assignment; may bind more names than a formula uses.
using Assignment3 = std::map<std::string, Tri>;

// Immutable propositional AST over element-named variables. And/Or are n-ary
// (encoded formulas are large conjunctions); Imp/Iff are binary.
class Formula {
 public:
  enum class Op { var, constant, neg, conj, disj, imp, iff };

  static Formula var(std::string name);
  static Formula constant(Tri value);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Op op() const;
  const std::string& var_name() const;
  Tri const_value() const;
  const std::vector<Formula>& children() const;

  /// Sorted, deduplicated variable names.
  std::vector<std::string> variables() const;

  /// Fully parenthesized text: !, &, |, ->, <->, constants 0, 1/2, 1.
  std::string pretty() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Flattened postfix form bound to a fixed variable order; evaluation takes
// values in halves (0, 1, 2). Not thread-safe (reuses one scratch stack).
class CompiledFormula {
 public:
  CompiledFormula(const Formula& formula,
                  const std::vector<std::string>& var_order);

  int eval_halves(std::span<const int> values) const;

 private:
  struct Ins {
    Formula::Op op;
    int arg;  // var: slot, constant: halves, conj/disj: arity
  };
  std::vector<Ins> code_;
  mutable std::vector<int> stack_;
};

Tri eval3(const Formula& formula, const Assignment3& assignment);

bool is_model3(const Formula& formula, const Assignment3& assignment);

/// All assignments with value 1, in lexicographic order over the sorted
/// variable list with value order 0 < 1/2 < 1. Throws CapExceeded when
/// 3^(#variables) > cap.
std::vector<Assignment3> enumerate_models3(const Formula& formula,
                                           long long cap);

/// 3^n, saturating at LLONG_MAX.
long long pow3(int n);

}  // namespace afsa

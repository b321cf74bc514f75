#include "afsa/fuzzy.hpp"

#include <algorithm>
#include <unordered_map>

#include "afsa/errors.hpp"

namespace afsa {

std::string family_name(Family f) {
  switch (f) {
    case Family::godel: return "godel";
    case Family::lukasiewicz: return "lukasiewicz";
    case Family::product: return "product";
  }
  return "?";
}

double Algebra::tnorm(double x, double y) const {
  switch (family) {
    case Family::godel: return std::min(x, y);
    case Family::lukasiewicz: return std::max(0.0, x + y - 1.0);
    case Family::product: return x * y;
  }
  return 0.0;
}

double Algebra::conorm(double x, double y) const {
  switch (family) {
    case Family::godel: return std::max(x, y);
    case Family::lukasiewicz: return std::min(1.0, x + y);
    case Family::product: return x + y - x * y;
  }
  return 0.0;
}

double Algebra::implication(double x, double y) const {
  if (x <= y) return 1.0;
  switch (family) {
    case Family::godel: return y;
    case Family::lukasiewicz: return 1.0 - x + y;
    case Family::product: return y / x;
  }
  return 0.0;
}

Algebra algebra_for(Family family) { return Algebra{family}; }

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw DomainError(std::string(what) + " outside [0,1]");
}

double eval_rec(const Formula& f,
                const std::unordered_map<std::string, double>& vals,
                const Algebra& alg) {
  switch (f.op()) {
    case Formula::Op::var: {
      auto it = vals.find(f.var_name());
      if (it == vals.end()) throw UnboundVariable(f.var_name());
      return it->second;
    }
    case Formula::Op::constant:
      return tri_to_double(f.const_value());
    case Formula::Op::neg:
      return alg.neg(eval_rec(f.children()[0], vals, alg));
    case Formula::Op::conj: {
      double v = 1.0;
      for (const auto& k : f.children()) v = alg.tnorm(v, eval_rec(k, vals, alg));
      return v;
    }
    case Formula::Op::disj: {
      double v = 0.0;
      for (const auto& k : f.children()) v = alg.conorm(v, eval_rec(k, vals, alg));
      return v;
    }
    case Formula::Op::imp:
      return alg.implication(eval_rec(f.children()[0], vals, alg),
                             eval_rec(f.children()[1], vals, alg));
    case Formula::Op::iff: {
      double x = eval_rec(f.children()[0], vals, alg);
      double y = eval_rec(f.children()[1], vals, alg);
      return alg.tnorm(alg.implication(x, y), alg.implication(y, x));
    }
  }
  return 0.0;
}

}  // namespace

double eval_fuzzy(const Formula& formula, const AssignmentR& assignment,
                  const Algebra& algebra) {
  std::unordered_map<std::string, double> vals;
  for (const auto& [name, v] : assignment) {
    check_unit(v, "assignment value");
    vals.emplace(name, v);
  }
  return eval_rec(formula, vals, algebra);
}

double eval_fuzzy_ordered(const Formula& formula,
                          std::span<const std::string> order,
                          std::span<const double> values,
                          const Algebra& algebra) {
  std::unordered_map<std::string, double> vals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    check_unit(values[i], "assignment value");
    vals.emplace(order[i], values[i]);
  }
  return eval_rec(formula, vals, algebra);
}

double luk_nary_closed_form(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("luk_nary_closed_form: empty sequence");
  double sum = 0.0;
  for (double x : xs) {
    check_unit(x, "t-norm operand");
    sum += x;
  }
  double n = static_cast<double>(xs.size());
  return sum <= n - 1.0 ? 0.0 : sum - n + 1.0;
}

double implication_value(const Algebra& algebra, double x, double y) {
  check_unit(x, "implication argument");
  check_unit(y, "implication argument");
  return algebra.implication(x, y);
}

}  // namespace afsa

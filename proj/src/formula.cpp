#include "afsa/formula.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "afsa/errors.hpp"

namespace afsa {

struct Formula::Node {
  Op op;
  Tri value = Tri::zero;     // constant
  std::string name;          // var
  std::vector<Formula> kids;
};

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::var;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::constant(Tri value) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = value;
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::neg;
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conj(std::vector<Formula> children) {
  if (children.empty()) throw std::invalid_argument("empty conjunction");
  auto n = std::make_shared<Node>();
  n->op = Op::conj;
  n->kids = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::disj(std::vector<Formula> children) {
  if (children.empty()) throw std::invalid_argument("empty disjunction");
  auto n = std::make_shared<Node>();
  n->op = Op::disj;
  n->kids = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::imp;
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return Formula(std::move(n));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::iff;
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return Formula(std::move(n));
}

Formula::Op Formula::op() const { return node_->op; }
const std::string& Formula::var_name() const { return node_->name; }
Tri Formula::const_value() const { return node_->value; }
const std::vector<Formula>& Formula::children() const { return node_->kids; }

static void collect_vars(const Formula& f, std::vector<std::string>& out) {
  if (f.op() == Formula::Op::var) {
    out.push_back(f.var_name());
    return;
  }
  for (const auto& k : f.children()) collect_vars(k, out);
}

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> out;
  collect_vars(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

static void pretty_rec(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Formula::Op::var:
      out += f.var_name();
      break;
    case Formula::Op::constant:
      out += tri_label(f.const_value());
      break;
    case Formula::Op::neg:
      out += "(!";
      pretty_rec(f.children()[0], out);
      out += ")";
      break;
    case Formula::Op::conj:
    case Formula::Op::disj: {
      const char* sep = f.op() == Formula::Op::conj ? " & " : " | ";
      out += "(";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        pretty_rec(f.children()[i], out);
      }
      out += ")";
      break;
    }
    case Formula::Op::imp:
    case Formula::Op::iff:
      out += "(";
      pretty_rec(f.children()[0], out);
      out += f.op() == Formula::Op::imp ? " -> " : " <-> ";
      pretty_rec(f.children()[1], out);
      out += ")";
      break;
  }
}

std::string Formula::pretty() const {
  std::string out;
  pretty_rec(*this, out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->op != other.node_->op) return false;
  switch (node_->op) {
    case Op::var: return node_->name == other.node_->name;
    case Op::constant: return node_->value == other.node_->value;
    default:
      if (node_->kids.size() != other.node_->kids.size()) return false;
      for (std::size_t i = 0; i < node_->kids.size(); ++i)
        if (!(node_->kids[i] == other.node_->kids[i])) return false;
      return true;
  }
}

CompiledFormula::CompiledFormula(const Formula& formula,
                                 const std::vector<std::string>& var_order) {
  std::unordered_map<std::string, int> slot;
  for (std::size_t i = 0; i < var_order.size(); ++i)
    slot.emplace(var_order[i], static_cast<int>(i));

  int depth = 0, max_depth = 1;
  auto emit = [&](const Formula& f, auto&& self) -> void {
    switch (f.op()) {
      case Formula::Op::var: {
        auto it = slot.find(f.var_name());
        if (it == slot.end()) throw UnboundVariable(f.var_name());
        code_.push_back({Formula::Op::var, it->second});
        max_depth = std::max(max_depth, ++depth);
        break;
      }
      case Formula::Op::constant:
        code_.push_back({Formula::Op::constant, halves(f.const_value())});
        max_depth = std::max(max_depth, ++depth);
        break;
      default:
        for (const auto& k : f.children()) self(k, self);
        code_.push_back({f.op(), static_cast<int>(f.children().size())});
        depth -= static_cast<int>(f.children().size()) - 1;
        break;
    }
  };
  emit(formula, emit);
  stack_.resize(max_depth);
}

int CompiledFormula::eval_halves(std::span<const int> values) const {
  int top = 0;
  for (const Ins& ins : code_) {
    switch (ins.op) {
      case Formula::Op::var:
        stack_[top++] = values[ins.arg];
        break;
      case Formula::Op::constant:
        stack_[top++] = ins.arg;
        break;
      case Formula::Op::neg:
        stack_[top - 1] = 2 - stack_[top - 1];
        break;
      case Formula::Op::conj: {
        int v = stack_[top - ins.arg];
        for (int i = 1; i < ins.arg; ++i)
          v = std::min(v, stack_[top - ins.arg + i]);
        top -= ins.arg - 1;
        stack_[top - 1] = v;
        break;
      }
      case Formula::Op::disj: {
        int v = stack_[top - ins.arg];
        for (int i = 1; i < ins.arg; ++i)
          v = std::max(v, stack_[top - ins.arg + i]);
        top -= ins.arg - 1;
        stack_[top - 1] = v;
        break;
      }
      case Formula::Op::imp: {
        int y = stack_[--top];
        int x = stack_[top - 1];
        stack_[top - 1] = std::min(2, 2 - x + y);
        break;
      }
      case Formula::Op::iff: {
        int y = stack_[--top];
        int x = stack_[top - 1];
        stack_[top - 1] = 2 - std::abs(x - y);
        break;
      }
    }
  }
  return stack_[0];
}

static Tri eval3_rec(const Formula& f, const Assignment3& a) {
  switch (f.op()) {
    case Formula::Op::var: {
      auto it = a.find(f.var_name());
      if (it == a.end()) throw UnboundVariable(f.var_name());
      return it->second;
    }
    case Formula::Op::constant:
      return f.const_value();
    case Formula::Op::neg:
      return tri_neg(eval3_rec(f.children()[0], a));
    case Formula::Op::conj: {
      Tri v = Tri::one;
      for (const auto& k : f.children()) v = tri_and(v, eval3_rec(k, a));
      return v;
    }
    case Formula::Op::disj: {
      Tri v = Tri::zero;
      for (const auto& k : f.children()) v = tri_or(v, eval3_rec(k, a));
      return v;
    }
    case Formula::Op::imp:
      return tri_imp(eval3_rec(f.children()[0], a), eval3_rec(f.children()[1], a));
    case Formula::Op::iff:
      return tri_iff(eval3_rec(f.children()[0], a), eval3_rec(f.children()[1], a));
  }
  return Tri::zero;
}

Tri eval3(const Formula& formula, const Assignment3& assignment) {
  return eval3_rec(formula, assignment);
}

bool is_model3(const Formula& formula, const Assignment3& assignment) {
  return eval3(formula, assignment) == Tri::one;
}

long long pow3(int n) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > LLONG_MAX / 3) return LLONG_MAX;
    v *= 3;
  }
  return v;
}

std::vector<Assignment3> enumerate_models3(const Formula& formula,
                                           long long cap) {
  const std::vector<std::string> vars = formula.variables();
  const int n = static_cast<int>(vars.size());
  const long long required = pow3(n);
  if (required > cap) throw CapExceeded(required, cap);

  CompiledFormula prog(formula, vars);
  std::vector<int> vals(n, 0);
  std::vector<Assignment3> models;
  for (;;) {
    if (prog.eval_halves(vals) == 2) {
      Assignment3 a;
      for (int i = 0; i < n; ++i) a[vars[i]] = tri_from_halves(vals[i]);
      models.push_back(std::move(a));
    }
    int i = n - 1;
    while (i >= 0 && vals[i] == 2) vals[i--] = 0;
    if (i < 0) break;
    ++vals[i];
  }
  return models;
}

}  // namespace afsa

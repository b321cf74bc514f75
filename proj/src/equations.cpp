#include "afsa/equations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "afsa/errors.hpp"
#include "afsa/formula.hpp"

namespace afsa {

EquationSystem::EquationSystem(std::vector<std::string> variables,
                               Family family, Kind kind,
                               std::vector<std::vector<Group>> groups)
    : variables_(std::move(variables)),
      family_(family),
      kind_(kind),
      groups_(std::move(groups)) {}

double EquationSystem::outer(std::span<const double> gv) const {
  if (custom_outer_) return custom_outer_(gv);
  switch (family_) {
    case Family::godel: {
      double v = 1.0;
      for (double g : gv) v = std::min(v, g);
      return v;
    }
    case Family::product: {
      double v = 1.0;
      for (double g : gv) v *= g;
      return v;
    }
    case Family::lukasiewicz: {
      double sum = 0.0;
      for (double g : gv) sum += g;
      double n = static_cast<double>(gv.size());
      return sum <= n - 1.0 ? 0.0 : sum - n + 1.0;
    }
  }
  return 0.0;
}

double EquationSystem::inner(std::span<const double> u) const {
  if (custom_inner_) return custom_inner_(u);
  switch (family_) {
    case Family::godel: {
      // max over 1 - u_m
      double v = 0.0;
      for (double m : u) v = std::max(v, 1.0 - m);
      return v;
    }
    case Family::product: {
      double prod = 1.0;
      for (double m : u) prod *= m;
      return 1.0 - prod;
    }
    case Family::lukasiewicz: {
      double sum = 0.0;
      for (double m : u) sum += m;
      double k = static_cast<double>(u.size());
      return sum <= k - 1.0 ? 1.0 : k - sum;
    }
  }
  return 0.0;
}

double EquationSystem::apply(int var, std::span<const double> x) const {
  const auto& gs = groups_[var];
  if (gs.empty()) return 1.0;  // imaginary-arrow value for unattacked elements
  double scratch[2];
  std::vector<double> gv;
  gv.reserve(gs.size());
  std::vector<double> u;
  for (const Group& g : gs) {
    if (g.attack_slot >= 0 && g.member_slots.size() == 1) {
      // singleton-source shape: avoid the vector round trip
      scratch[0] = x[g.attack_slot];
      scratch[1] = x[g.member_slots[0]];
      gv.push_back(inner(std::span<const double>(scratch, 2)));
      continue;
    }
    u.clear();
    if (g.attack_slot >= 0) u.push_back(x[g.attack_slot]);
    for (int m : g.member_slots) u.push_back(x[m]);
    gv.push_back(inner(u));
  }
  return outer(gv);
}

void EquationSystem::apply_all(std::span<const double> x,
                               std::span<double> out) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    out[i] = apply(static_cast<int>(i), x);
}

double EquationSystem::residual_of(std::span<const double> x) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    worst = std::max(worst, std::abs(x[i] - apply(static_cast<int>(i), x)));
  return worst;
}

EquationSystem EquationSystem::with_tuple_ops(VecFn outer, VecFn inner) const {
  EquationSystem copy = *this;
  copy.custom_outer_ = std::move(outer);
  copy.custom_inner_ = std::move(inner);
  return copy;
}

bool EquationSystem::exact_three_valued() const {
  return family_ == Family::godel && !custom_outer_ && !custom_inner_;
}

int EquationSystem::apply_halves(int var, std::span<const int> x) const {
  const auto& gs = groups_[var];
  if (gs.empty()) return 2;
  int v = 2;  // min over groups
  for (const Group& g : gs) {
    int gi = 0;  // max over 2 - u
    if (g.attack_slot >= 0) gi = std::max(gi, 2 - x[g.attack_slot]);
    for (int m : g.member_slots) gi = std::max(gi, 2 - x[m]);
    v = std::min(v, gi);
  }
  return v;
}

EquationSystem build_system(const Framework& framework, const Algebra& algebra) {
  require_valid(framework);
  std::vector<std::string> order = framework.labellable();
  std::unordered_map<std::string, int> slot;
  for (std::size_t i = 0; i < order.size(); ++i)
    slot.emplace(order[i], static_cast<int>(i));

  std::vector<std::vector<EquationSystem::Group>> groups(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Attack* atk : framework.attackers_of(order[i])) {
      EquationSystem::Group g;
      if (framework.kind() != Kind::setaf) g.attack_slot = slot.at(atk->id);
      for (const auto& m : atk->source) g.member_slots.push_back(slot.at(m));
      groups[i].push_back(std::move(g));
    }
  }
  return EquationSystem(std::move(order), algebra.family, framework.kind(),
                        std::move(groups));
}

double residual(const EquationSystem& system, const AssignmentR& assignment) {
  const auto& vars = system.variables();
  std::vector<double> x(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = assignment.find(vars[i]);
    if (it == assignment.end()) throw UnboundVariable(vars[i]);
    x[i] = it->second;
  }
  return system.residual_of(x);
}

namespace {

// 53-bit uniform in [0,1); keeps solver output portable across libstdc++
// versions (raw mt19937_64 output is pinned by the standard, distributions
// are not).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Attempt {
  std::vector<double> x;
  double res = 1.0;
  int iterations = 0;
};

Attempt iterate(const EquationSystem& sys, std::vector<double> x, double lambda,
                int max_iterations, double inner_target) {
  const std::size_t n = x.size();
  std::vector<double> fx(n);
  std::vector<double> best_x = x;
  double best_res = sys.residual_of(x);
  int iters = 0;
  int since_best = 0;

  while (best_res > inner_target && iters < max_iterations) {
    sys.apply_all(x, fx);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      res = std::max(res, std::abs(x[i] - fx[i]));
    if (res < best_res) {
      best_res = res;
      best_x = x;
      since_best = 0;
    } else if (++since_best > 2000) {
      break;
    }
    for (std::size_t i = 0; i < n; ++i)
      x[i] = (1.0 - lambda) * x[i] + lambda * fx[i];
    ++iters;
  }
  // the loop measures the residual of x before stepping; measure once more
  double final_res = sys.residual_of(x);
  if (final_res < best_res) {
    best_res = final_res;
    best_x = std::move(x);
  }
  return Attempt{std::move(best_x), best_res, iters};
}

// Improvement-only cleanup: snap near-endpoint coordinates, then Gauss-Seidel
// sweeps while the residual strictly drops. Lands exactly on fixed points of
// the acyclic parts.
void polish(const EquationSystem& sys, Attempt& a) {
  const std::size_t n = a.x.size();
  std::vector<double> y = a.x;
  bool snapped = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] != 0.0 && std::abs(y[i]) <= 1e-12) {
      y[i] = 0.0;
      snapped = true;
    } else if (y[i] != 1.0 && std::abs(y[i] - 1.0) <= 1e-12) {
      y[i] = 1.0;
      snapped = true;
    }
  }
  if (snapped) {
    double r = sys.residual_of(y);
    if (r <= a.res) {
      a.x = y;
      a.res = r;
    }
  }
  for (int sweep = 0; sweep < 64; ++sweep) {
    y = a.x;
    for (std::size_t i = 0; i < n; ++i)
      y[i] = sys.apply(static_cast<int>(i), y);
    double r = sys.residual_of(y);
    if (r < a.res) {
      a.x = y;
      a.res = r;
    } else {
      break;
    }
  }
}

}  // namespace

SolveResult solve_fixed_point(const EquationSystem& system,
                              const SolveConfig& config) {
  const std::size_t n = system.variables().size();
  std::mt19937_64 rng(config.seed);
  const double inner_target = std::min(config.tolerance, 1e-13);

  SolveResult best;
  best.residual = std::numeric_limits<double>::infinity();

  const int attempts = std::max(1, config.restarts + 1);
  for (int a = 0; a < attempts; ++a) {
    double lambda = a == 0 ? config.damping
                  : a % 2 == 1 ? 0.5
                               : config.damping;
    std::vector<double> start(n, 0.5);
    if (a >= 2)
      for (std::size_t i = 0; i < n; ++i) start[i] = uniform01(rng);

    Attempt attempt =
        iterate(system, std::move(start), lambda, config.max_iterations,
                inner_target);
    polish(system, attempt);

    if (attempt.res <= config.tolerance) {
      SolveResult result;
      result.status = SolveStatus::converged;
      for (std::size_t i = 0; i < n; ++i)
        result.assignment[system.variables()[i]] = attempt.x[i];
      result.residual = attempt.res;
      result.iterations = attempt.iterations;
      result.restart = a;
      return result;
    }
    if (attempt.res < best.residual) {
      best.residual = attempt.res;
      best.iterations = attempt.iterations;
      best.restart = a;
    }
  }
  best.status = SolveStatus::failed;
  return best;
}

ValidationReport validate_tuple_axioms(const EquationSystem& system,
                                       int samples, std::uint64_t seed) {
  ValidationReport report;
  std::mt19937_64 rng(seed);
  const double tol = 1e-12;

  auto flag = [&](const std::string& code, const std::string& msg,
                  const std::string& id) {
    report.violations.push_back({code, msg, {id}});
  };

  for (std::size_t v = 0; v < system.variables().size(); ++v) {
    const auto& gs = system.groups()[v];
    if (gs.empty()) continue;
    const std::string& id = system.variables()[v];
    const int k = static_cast<int>(gs.size());

    std::vector<double> ones(k, 1.0);
    if (std::abs(system.outer(ones) - 1.0) > tol)
      flag("h_ones", "h(1,...,1) != 1", id);

    for (int s = 0; s < samples; ++s) {
      std::vector<double> x(k);
      for (int i = 0; i < k; ++i) x[i] = uniform01(rng);

      std::vector<double> with_zero = x;
      with_zero[rng() % k] = 0.0;
      if (system.outer(with_zero) != 0.0)
        flag("h_zero", "h with a zero coordinate != 0", id);

      std::vector<double> perm = x;
      std::shuffle(perm.begin(), perm.end(), rng);
      if (std::abs(system.outer(x) - system.outer(perm)) > tol)
        flag("h_perm", "h is not permutation invariant", id);
    }

    for (const auto& g : gs) {
      const int arity = static_cast<int>(g.member_slots.size()) +
                        (g.attack_slot >= 0 ? 1 : 0);
      std::vector<double> ones_u(arity, 1.0);
      if (std::abs(system.inner(ones_u)) > tol)
        flag("hi_ones", "h_i(1,...,1) != 0", id);

      for (int s = 0; s < samples; ++s) {
        std::vector<double> u(arity);
        for (int i = 0; i < arity; ++i) u[i] = uniform01(rng);

        std::vector<double> with_zero = u;
        with_zero[rng() % arity] = 0.0;
        if (system.inner(with_zero) != 1.0)
          flag("hi_zero", "h_i with a zero input != 1", id);

        std::vector<double> perm = u;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (std::abs(system.inner(u) - system.inner(perm)) > tol)
          flag("hi_perm", "h_i is not permutation invariant", id);
      }
    }
  }
  return report;
}

Labelling3 ternarize(const AssignmentR& assignment) {
  Labelling3 out;
  for (const auto& [name, v] : assignment) {
    if (v < -1e-9 || v > 1.0 + 1e-9)
      throw DomainError("ternarize: value outside [0,1] for '" + name + "'");
    if (std::abs(v) <= 1e-9)
      out[name] = Tri::zero;
    else if (std::abs(v - 1.0) <= 1e-9)
      out[name] = Tri::one;
    else
      out[name] = Tri::half;
  }
  return out;
}

std::vector<Labelling3> enumerate_3valued_solutions(const EquationSystem& system,
                                                    long long cap) {
  const auto& vars = system.variables();
  const int n = static_cast<int>(vars.size());
  const long long required = pow3(n);
  if (required > cap) throw CapExceeded(required, cap);

  std::vector<Labelling3> out;
  std::vector<int> v(n, 0);
  std::vector<double> x(n), fx(n);
  const bool exact = system.exact_three_valued();
  for (;;) {
    bool solution = true;
    if (exact) {
      for (int i = 0; i < n && solution; ++i)
        if (system.apply_halves(i, v) != v[i]) solution = false;
    } else {
      for (int i = 0; i < n; ++i) x[i] = v[i] * 0.5;
      for (int i = 0; i < n && solution; ++i)
        if (system.apply(i, x) != x[i]) solution = false;
    }
    if (solution) {
      Labelling3 lab;
      for (int i = 0; i < n; ++i) lab[vars[i]] = tri_from_halves(v[i]);
      out.push_back(std::move(lab));
    }
    int i = n - 1;
    while (i >= 0 && v[i] == 2) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace afsa

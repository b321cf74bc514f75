#include "afsa/semantics.hpp"

#include <unordered_map>

#include "afsa/errors.hpp"

namespace afsa {

namespace {

// Per-element view of the attacks targeting it, as slots into the canonical
// element order. attack_slot is -1 for SETAF (attacks are not labellable).
struct AttackerEntry {
  int attack_slot;
  std::vector<int> member_slots;
};

struct CaseChecker {
  Kind kind;
  std::vector<std::vector<AttackerEntry>> attackers;  // per labellable element

  explicit CaseChecker(const Framework& f) : kind(f.kind()) {
    std::vector<std::string> order = f.labellable();
    std::unordered_map<std::string, int> slot;
    for (std::size_t i = 0; i < order.size(); ++i)
      slot.emplace(order[i], static_cast<int>(i));
    attackers.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const Attack* atk : f.attackers_of(order[i])) {
        AttackerEntry entry;
        entry.attack_slot = kind == Kind::setaf ? -1 : slot.at(atk->id);
        for (const auto& m : atk->source) entry.member_slots.push_back(slot.at(m));
        attackers[i].push_back(std::move(entry));
      }
    }
  }

  // The three case conditions, stated literally: an element is 1 iff it is
  // unattacked or every attacker is disabled, 0 iff some attacker fully
  // applies at value 1, and 1/2 otherwise.
  bool element_ok(int beta, std::span<const int> v) const {
    bool all_disabled = true;
    bool some_applies = false;
    for (const AttackerEntry& e : attackers[beta]) {
      bool member_zero = false;
      bool members_one = true;
      for (int m : e.member_slots) {
        if (v[m] == 0) member_zero = true;
        if (v[m] != 2) members_one = false;
      }
      bool disabled, applies;
      if (e.attack_slot < 0) {
        disabled = member_zero;
        applies = members_one;
      } else {
        disabled = member_zero || v[e.attack_slot] == 0;
        applies = members_one && v[e.attack_slot] == 2;
      }
      if (!disabled) all_disabled = false;
      if (applies) some_applies = true;
    }
    if (some_applies) return v[beta] == 0;
    if (all_disabled) return v[beta] == 2;
    return v[beta] == 1;
  }

  bool ok(std::span<const int> v) const {
    for (std::size_t i = 0; i < attackers.size(); ++i)
      if (!element_ok(static_cast<int>(i), v)) return false;
    return true;
  }
};

}  // namespace

bool check_complete(const Framework& framework, const Labelling3& labelling) {
  require_valid(framework);
  std::vector<std::string> order = framework.labellable();
  if (labelling.size() != order.size())
    throw DomainError("labelling domain must equal the labellable elements");
  std::vector<int> v(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = labelling.find(order[i]);
    if (it == labelling.end())
      throw DomainError("labelling is missing element '" + order[i] + "'");
    v[i] = halves(it->second);
  }
  return CaseChecker(framework).ok(v);
}

std::vector<Labelling3> enumerate_complete(const Framework& framework,
                                           long long cap) {
  require_valid(framework);
  std::vector<std::string> order = framework.labellable();
  const int n = static_cast<int>(order.size());
  const long long required = pow3(n);
  if (required > cap) throw CapExceeded(required, cap);

  CaseChecker checker(framework);
  std::vector<int> v(n, 0);
  std::vector<Labelling3> out;
  for (;;) {
    if (checker.ok(v)) {
      Labelling3 lab;
      for (int i = 0; i < n; ++i) lab[order[i]] = tri_from_halves(v[i]);
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

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "afsa/framework.hpp"
#include "afsa/frame_io.hpp"

namespace afsa::testsupport {

struct GenOptions {
  int max_args = 4;
  int max_attacks = 4;
  int max_level = 2;
};

inline int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random well-formed framework of the given kind. Naming discipline: argument
// names sort before attack names and attack names sort in declaration order,
// which keeps the canonical element order stable under the SETAF transform.
inline Framework random_framework(Kind kind, std::mt19937_64& rng,
                                  GenOptions opt = {}) {
  static const char* kArgNames[] = {"a", "b", "c", "d", "e", "f"};
  const int n_args = 1 + pick(rng, opt.max_args);
  std::vector<std::string> args(kArgNames, kArgNames + n_args);
  const int want_attacks = pick(rng, opt.max_attacks + 1);

  std::vector<Attack> attacks;
  std::map<std::string, int> attack_level;
  std::set<std::pair<std::set<std::string>, std::string>> setaf_entries;

  auto referencable_attacks = [&]() {
    std::vector<std::string> out;
    for (const auto& atk : attacks)
      if (attack_level.at(atk.id) <= opt.max_level - 1) out.push_back(atk.id);
    return out;
  };

  auto level_of_ref = [&](const std::string& id) {
    auto it = attack_level.find(id);
    return it == attack_level.end() ? -1 : it->second;
  };

  for (int i = 0; i < want_attacks; ++i) {
    std::vector<std::string> higher = referencable_attacks();

    std::string target;
    if (kind == Kind::daf || kind == Kind::setaf || higher.empty() ||
        pick(rng, 3) == 0) {
      target = args[pick(rng, n_args)];
    } else {
      target = higher[pick(rng, static_cast<int>(higher.size()))];
    }

    std::vector<std::string> source;
    if (kind == Kind::daf || kind == Kind::hlaf) {
      source.push_back(args[pick(rng, n_args)]);
    } else if (kind == Kind::bhaf) {
      if (!higher.empty() && pick(rng, 3) == 0)
        source.push_back(higher[pick(rng, static_cast<int>(higher.size()))]);
      else
        source.push_back(args[pick(rng, n_args)]);
    } else {
      std::vector<std::string> pool(args.begin(), args.end());
      if (kind == Kind::hsaf)
        pool.insert(pool.end(), higher.begin(), higher.end());
      const int size = 1 + pick(rng, std::min<int>(3, static_cast<int>(pool.size())));
      std::set<std::string> chosen;
      while (static_cast<int>(chosen.size()) < size)
        chosen.insert(pool[pick(rng, static_cast<int>(pool.size()))]);
      // canonical member order: arguments first, then attacks, each sorted
      for (const auto& m : chosen)
        if (level_of_ref(m) < 0) source.push_back(m);
      for (const auto& m : chosen)
        if (level_of_ref(m) >= 0) source.push_back(m);
    }

    if (kind == Kind::setaf) {
      std::set<std::string> key(source.begin(), source.end());
      if (!setaf_entries.emplace(std::move(key), target).second) continue;
    }

    std::string id = "r" + std::to_string(attacks.size() + 1);
    int lvl = 0;
    for (const auto& m : source)
      if (level_of_ref(m) >= 0) lvl = std::max(lvl, 1 + level_of_ref(m));
    if (level_of_ref(target) >= 0) lvl = std::max(lvl, 1 + level_of_ref(target));
    attack_level[id] = lvl;
    attacks.push_back(Attack{std::move(id), std::move(source), target});
  }

  return Framework(kind, std::move(args), std::move(attacks));
}

inline std::set<Labelling3> labelling_set(const std::vector<Labelling3>& v) {
  return std::set<Labelling3>(v.begin(), v.end());
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace afsa::testsupport

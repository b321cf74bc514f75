#include "afsa/transform.hpp"

#include <set>

namespace afsa {

TransformResult to_setaf(const Framework& framework) {
  require_valid(framework);

  std::map<std::string, std::string> mapping;
  for (const auto& id : framework.labellable()) mapping[id] = id;

  if (framework.kind() == Kind::setaf)
    return TransformResult{framework, std::move(mapping)};

  std::vector<std::string> args = framework.arguments();
  std::set<std::string> used(args.begin(), args.end());
  for (const auto& atk : framework.attacks()) {
    args.push_back(atk.id);
    used.insert(atk.id);
  }

  std::vector<Attack> attacks;
  attacks.reserve(framework.attacks().size());
  int counter = 0;
  for (const auto& atk : framework.attacks()) {
    std::string id;
    do {
      id = "t" + std::to_string(++counter);
    } while (used.count(id));
    used.insert(id);

    // Member order is chosen to reproduce the original encoded term shape:
    // [source, attack] for singleton-source kinds, [attack, members...] for
    // HSAF.
    std::vector<std::string> source;
    if (framework.kind() == Kind::hsaf) {
      source.push_back(atk.id);
      source.insert(source.end(), atk.source.begin(), atk.source.end());
    } else {
      source = atk.source;
      source.push_back(atk.id);
    }
    attacks.push_back(Attack{std::move(id), std::move(source), atk.target});
  }

  TransformResult result{Framework(Kind::setaf, std::move(args), std::move(attacks)),
                         std::move(mapping)};
  require_valid(result.setaf);
  return result;
}

}  // namespace afsa

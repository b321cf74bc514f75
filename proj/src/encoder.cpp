#include "afsa/encoder.hpp"

namespace afsa {

namespace {

Formula attack_term(const Framework& f, const Attack& atk) {
  std::vector<Formula> parts;
  if (f.kind() == Kind::setaf) {
    for (const auto& m : atk.source) parts.push_back(Formula::var(m));
  } else if (f.kind() == Kind::hsaf) {
    parts.push_back(Formula::var(atk.id));
    for (const auto& m : atk.source) parts.push_back(Formula::var(m));
  } else {
    parts.push_back(Formula::var(atk.source[0]));
    parts.push_back(Formula::var(atk.id));
  }
  if (parts.size() == 1) return Formula::neg(std::move(parts[0]));
  return Formula::neg(Formula::conj(std::move(parts)));
}

}  // namespace

EncodedFrame encode(const Framework& framework) {
  require_valid(framework);

  std::vector<std::string> variables = framework.labellable();
  std::vector<Formula> conjuncts;
  conjuncts.reserve(variables.size());

  for (const auto& beta : variables) {
    std::vector<Formula> terms;
    for (const Attack* atk : framework.attackers_of(beta))
      terms.push_back(attack_term(framework, *atk));

    Formula inner = terms.empty() ? Formula::neg(Formula::constant(Tri::zero))
                    : terms.size() == 1 ? std::move(terms[0])
                                        : Formula::conj(std::move(terms));
    conjuncts.push_back(Formula::iff(Formula::var(beta), std::move(inner)));
  }

  Formula formula = conjuncts.empty() ? Formula::constant(Tri::one)
                    : conjuncts.size() == 1
                        ? std::move(conjuncts[0])
                        : Formula::conj(std::move(conjuncts));
  return EncodedFrame{std::move(formula), std::move(variables),
                      framework.kind()};
}

}  // namespace afsa

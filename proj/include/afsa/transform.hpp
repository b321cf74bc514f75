#pragma once

#include <map>
#include <string>

#include "afsa/framework.hpp"

namespace afsa {

struct TransformResult {
  Framework setaf;
  // Original labellable element -> argument of the new SETAF. Old names are
  // reused verbatim, so this is the identity map.
  std::map<std::string, std::string> mapping;
};

/// Rewrites an HLAF/BHAF/HSAF (or DAF) as a SETAF over the enlarged argument
/// set (arguments plus attack names): each attack (S, beta) named r becomes
/// the set attacker S u {r} of beta. A SETAF input is returned unchanged.
/// The transformed framework encodes to the same formula and has the same
/// complete labellings.
TransformResult to_setaf(const Framework& framework);

}  // namespace afsa

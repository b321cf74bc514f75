#pragma once

#include <string>
#include <vector>

#include "afsa/formula.hpp"
#include "afsa/framework.hpp"

namespace afsa {

struct EncodedFrame {
  Formula formula;
  std::vector<std::string> variables;  // the labellable elements, canonical order
  Kind kind;
};

/// Normal encoding of a validated framework. One conjunct per labellable
/// element beta: beta <-> conjunction over beta's attackers of the negated
/// attack term (HLAF/BHAF: !(source & attack); HSAF: !(attack & members...);
/// SETAF: !(members...)). An unattacked element gets !0 for the inner side,
/// realizing the imaginary bottom argument (value 0) and imaginary arrow
/// (value 1) as constants. DAF encodes as a level-0 HLAF.
EncodedFrame encode(const Framework& framework);

}  // namespace afsa

#pragma once

#include <map>
#include <string>
#include <vector>

#include "afsa/framework.hpp"
#include "afsa/fuzzy.hpp"
#include "afsa/tri.hpp"

namespace afsa {

using Labelling3 = std::map<std::string, Tri>;

/// Parses a frame document. Throws ParseError (syntax, unknown/duplicate ids)
/// or ValidationError (kind constraint violations). The returned framework
/// always passes validate(); source members are in canonical order.
Framework parse_frame(const std::string& text);

/// Canonical form: `frame <kind>`, sorted `arg` lines, `atk` lines in
/// declaration order with canonically sorted source members.
std::string serialize_frame(const Framework& framework);

enum class LabellingMode { three_valued, real };

/// JSON Lines, one object per labelling, keys sorted; 3-valued values are the
/// exact strings "0", "1/2", "1"; real values use 12 fractional digits.
std::string write_labellings(const std::vector<Labelling3>& labellings,
                             LabellingMode mode);
std::string write_labellings(const std::vector<AssignmentR>& labellings);

/// Fixed real formatting used everywhere a [0,1] value is printed.
std::string format_real(double v);

}  // namespace afsa

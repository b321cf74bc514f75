#pragma once

#include <vector>

#include "afsa/frame_io.hpp"
#include "afsa/framework.hpp"

namespace afsa {

/// True iff `labelling` is a complete labelling of the framework under its
/// kind's case conditions. Written directly from the labelling definitions,
/// independently of the encoder. The labelling must be total on exactly the
/// labellable elements.
bool check_complete(const Framework& framework, const Labelling3& labelling);

/// Brute-force oracle: all complete labellings, in lexicographic order over
/// the canonical element order with value order 0 < 1/2 < 1. Throws
/// CapExceeded when 3^(#labellable) > cap.
std::vector<Labelling3> enumerate_complete(const Framework& framework,
                                           long long cap);

}  // namespace afsa

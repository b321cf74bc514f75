#pragma once

#include <cstdint>
#include <string>

namespace afsa {

// Exact 3-valued truth value, stored in halves: 0, 1/2, 1.
enum class Tri : std::uint8_t { zero = 0, half = 1, one = 2 };

inline int halves(Tri v) { return static_cast<int>(v); }

inline Tri tri_from_halves(int h) { return static_cast<Tri>(h); }

inline Tri tri_neg(Tri a) { return tri_from_halves(2 - halves(a)); }

inline Tri tri_and(Tri a, Tri b) { return a < b ? a : b; }

inline Tri tri_or(Tri a, Tri b) { return a < b ? b : a; }

// Lukasiewicz implication, min{1, 1 - x + y} on the 3-valued grid.
inline Tri tri_imp(Tri a, Tri b) {
  int v = 2 - halves(a) + halves(b);
  return tri_from_halves(v > 2 ? 2 : v);
}

inline Tri tri_iff(Tri a, Tri b) {
  int d = halves(a) - halves(b);
  return tri_from_halves(2 - (d < 0 ? -d : d));
}

inline double tri_to_double(Tri v) { return halves(v) * 0.5; }

inline std::string tri_label(Tri v) {
  switch (v) {
    case Tri::zero: return "0";
    case Tri::half: return "1/2";
    default: return "1";
  }
}

}  // namespace afsa

#pragma once

// Internal identity checks on raw row-major tables; hot paths for the
// enumerator and harness sweeps. Return the least violating tuple in
// row-major argument order, or empty.

#include <array>
#include <optional>

#include "rmg/magma.hpp"

namespace rmg::raw {

inline std::optional<std::array<Element, 3>> right_modular_violation(
    const Element* t, int n) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = t[x * n + y];
      for (Element z = 0; z < n; ++z)
        if (t[xy * n + z] != t[t[z * n + y] * n + x]) return {{x, y, z}};
    }
  return std::nullopt;
}

inline std::optional<std::array<Element, 3>> associativity_violation(
    const Element* t, int n) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = t[x * n + y];
      for (Element z = 0; z < n; ++z)
        if (t[xy * n + z] != t[x * n + t[y * n + z]]) return {{x, y, z}};
    }
  return std::nullopt;
}

inline std::optional<std::array<Element, 4>> medial_violation(const Element* t,
                                                              int n) {
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = t[a * n + b];
      for (Element c = 0; c < n; ++c) {
        const Element ac = t[a * n + c];
        for (Element d = 0; d < n; ++d)
          if (t[ab * n + t[c * n + d]] != t[ac * n + t[b * n + d]])
            return {{a, b, c, d}};
      }
    }
  return std::nullopt;
}

inline bool rows_are_permutations(const Element* t, int n) {
  for (Element a = 0; a < n; ++a) {
    unsigned seen = 0;
    for (Element b = 0; b < n; ++b) seen |= 1u << t[a * n + b];
    if (seen != (1u << n) - 1) return false;
  }
  return true;
}

inline bool columns_are_permutations(const Element* t, int n) {
  for (Element b = 0; b < n; ++b) {
    unsigned seen = 0;
    for (Element a = 0; a < n; ++a) seen |= 1u << t[a * n + b];
    if (seen != (1u << n) - 1) return false;
  }
  return true;
}

}  // namespace rmg::raw

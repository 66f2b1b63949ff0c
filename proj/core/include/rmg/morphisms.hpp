#pragma once

#include <optional>
#include <vector>

#include "rmg/magma.hpp"

namespace rmg {

/// A bijection on [0, n): map[i] is the image of i.
struct Permutation {
  std::vector<Element> map;

  static Permutation identity(int n);
  int order() const { return static_cast<int>(map.size()); }
  Element operator()(Element e) const { return map[e]; }
  Permutation inverse() const;
  bool valid() const;
};

/// Relabels m by p: result[p(a)][p(b)] = p(m[a][b]). Names follow elements.
Magma apply_permutation(const Magma& m, const Permutation& p);

/// A permutation carrying m1 onto m2, or nullopt. Exhaustive backtracking
/// with first-divergence pruning; returns the lexicographically least such
/// permutation, verified by re-application before being returned.
/// Bounded by Config::iso_max_order.
std::optional<Permutation> is_isomorphic(const Magma& m1, const Magma& m2);

/// The lexicographically least row-major table over all n! relabelings;
/// equal canonical forms characterize isomorphism. Result is unnamed.
Magma canonical_form(const Magma& m);

}  // namespace rmg

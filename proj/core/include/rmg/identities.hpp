#pragma once

#include <vector>

#include "rmg/magma.hpp"
#include "rmg/report.hpp"

namespace rmg {

/// (xy)z = (zy)x. Witness on failure: least violating (x, y, z).
PropertyReport is_right_modular(const Magma& m);

/// (ab)(cd) = (ac)(bd). Witness: least violating (a, b, c, d).
PropertyReport is_medial(const Magma& m);

/// (xy)z = x(yz). Witness: least violating (x, y, z).
PropertyReport is_associative(const Magma& m);

/// x = x*x for all x. Witness: least non-idempotent element.
PropertyReport is_idempotent(const Magma& m);

/// xy = yx. Witness: least violating (x, y).
PropertyReport is_commutative(const Magma& m);

/// { e : e*x = x for all x }.
ElementSet left_identities(const Magma& m);

/// ac = bc implies a = b; equivalently every column is a permutation.
/// Witness on failure: least (a, b, c) with a != b and a*c = b*c.
PropertyReport is_right_cancellative(const Magma& m);

/// ca = cb implies a = b; every row a permutation.
/// Witness: least (a, b, c) with a != b and c*a = c*b.
PropertyReport is_left_cancellative(const Magma& m);

PropertyReport is_cancellative(const Magma& m);

/// Every row and column a permutation; coincides with is_cancellative on
/// finite tables.
PropertyReport is_quasigroup(const Magma& m);

/// All subsets that are groups under the restricted product (closed,
/// associative, two-sided identity, inverses). Order bounded by
/// Config::subset_search_max_order.
std::vector<ElementSet> group_subsets(const Magma& m);

/// Every element lies in some group subset. Witness on failure: least
/// uncovered element.
PropertyReport is_union_of_groups(const Magma& m);

}  // namespace rmg

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rmg/magma.hpp"

namespace rmg {

/// Identity constraints for the table enumerator. All but not_associative
/// prune partial tables; not_associative filters completed ones.
struct RequireFlags {
  bool right_modular = false;
  bool idempotent = false;
  bool associative = false;
  bool not_associative = false;
  bool cancellative = false;
  bool right_cancellative = false;
  bool medial = false;
  bool commutative = false;

  bool any_pruning() const {
    return right_modular || idempotent || associative || cancellative ||
           right_cancellative || medial || commutative;
  }
};

struct EnumerationConstraints {
  int order = 1;
  RequireFlags require;
  /// Row-major fixed cells; empty vector means none. The idempotent flag
  /// additionally fixes the diagonal.
  std::vector<std::optional<Element>> fixed_cells;
  /// Values allowed in free cells (defaults to the full carrier).
  std::optional<ElementSet> free_cell_domain;
};

/// Throws CapacityError when the request is infeasible: the raw assignment
/// count d^f must stay under Config::enum_raw_cap unless a pruning identity
/// is required and the order is within Config::enum_pruned_max_order.
void check_enumeration_feasible(const EnumerationConstraints& c);

/// Depth-first cell assignment in row-major order over free cells, pruning
/// a branch as soon as a fully instantiated instance of a required identity
/// fails; visits every satisfying table in lexicographic order. The visitor
/// returns false to stop early.
void for_each_magma(const EnumerationConstraints& c,
                    const std::function<bool(const Magma&)>& visit);

/// Leaf count without materializing tables.
std::uint64_t count_magmas(const EnumerationConstraints& c);

/// Splits the search space by fixing the first free cells, producing at
/// least min_shards sub-constraints (unless the space is smaller);
/// concatenating their streams in order reproduces the full stream.
std::vector<EnumerationConstraints> shard_constraints(
    const EnumerationConstraints& c, int min_shards);

}  // namespace rmg

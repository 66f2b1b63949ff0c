#pragma once

#include <cstdint>

namespace rmg {

/// Capacity limits for the toolkit. Defaults cover every bundled analysis;
/// RMG_MAX_ORDER and RMG_ENUM_CAP in the environment override them.
struct Config {
  int max_order = 12;            // hard cap on any Cayley table
  int iso_max_order = 8;         // canonical form / isomorphism search bound
  int subset_search_max_order = 12;  // group_subsets / union-of-groups bound
  int extension_enum_max_order = 4;  // one-point spec enumeration bound
  std::uint64_t enum_raw_cap = std::uint64_t{1} << 26;  // free-cell assignments
                                                        // allowed without pruning
  int enum_pruned_max_order = 4;  // identity-pruned exhaustive search bound

  // Generalised-inflation search bounds: |G \ U| <= 2 for |U| <= 4,
  // |G \ U| <= 3 for |U| <= 3; one adjoined element is allowed at any order.
  int max_adjoined(int sub_order) const {
    if (sub_order <= 3) return 3;
    if (sub_order <= 4) return 2;
    return 1;
  }

  static const Config& get();
};

}  // namespace rmg

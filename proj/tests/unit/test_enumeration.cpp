#include <doctest.h>

#include "rmg/enumeration.hpp"
#include "rmg/fixtures.hpp"
#include "rmg/identities.hpp"

using namespace rmg;

namespace {

std::vector<Magma> collect(const EnumerationConstraints& c) {
  std::vector<Magma> out;
  for_each_magma(c, [&](const Magma& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// filter-after-full-enumeration reference
std::vector<Magma> brute_filter(int order,
                                const std::function<bool(const Magma&)>& keep) {
  std::vector<Magma> out;
  std::vector<Element> table(static_cast<std::size_t>(order) * order, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < order * order; ++i) total *= order;
  for (std::uint64_t id = 0; id < total; ++id) {
    std::uint64_t rest = id;
    // row-major digits, most significant first, to match lexicographic order
    for (int i = order * order - 1; i >= 0; --i) {
      table[i] = static_cast<Element>(rest % order);
      rest /= order;
    }
    Magma m(order, table);
    if (keep(m)) out.push_back(std::move(m));
  }
  return out;
}

EnumerationConstraints w_census_constraints(bool restrict_domain) {
  EnumerationConstraints c;
  c.order = 5;
  c.fixed_cells.assign(25, std::nullopt);
  const Magma& w = fixture("W");
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) c.fixed_cells[a * 5 + b] = w.op(a, b);
  if (restrict_domain) c.free_cell_domain = ElementSet(5, {0, 1, 2, 3});
  return c;
}

}  // namespace

TEST_CASE("unconstrained counts are n^k") {
  for (const auto& [order, expected] :
       std::vector<std::pair<int, std::uint64_t>>{{1, 1}, {2, 16}, {3, 19683}}) {
    EnumerationConstraints c;
    c.order = order;
    CHECK(count_magmas(c) == expected);
  }
}

TEST_CASE("the two W extension spaces have the documented sizes") {
  CHECK(count_magmas(w_census_constraints(false)) == 1953125);
  CHECK(count_magmas(w_census_constraints(true)) == 262144);
}

TEST_CASE("pruned enumeration equals filter-after-enumeration") {
  for (int n = 1; n <= 3; ++n) {
    EnumerationConstraints c;
    c.order = n;
    c.require.right_modular = true;
    const auto pruned = collect(c);
    const auto filtered =
        brute_filter(n, [](const Magma& m) { return is_right_modular(m).holds; });
    REQUIRE(pruned.size() == filtered.size());
    for (std::size_t i = 0; i < pruned.size(); ++i)
      CHECK(pruned[i] == filtered[i]);
  }

  EnumerationConstraints assoc2;
  assoc2.order = 2;
  assoc2.require.associative = true;
  CHECK(collect(assoc2).size() ==
        brute_filter(2, [](const Magma& m) { return is_associative(m).holds; })
            .size());

  EnumerationConstraints na2;
  na2.order = 2;
  na2.require.not_associative = true;
  CHECK(count_magmas(na2) ==
        16 - brute_filter(2, [](const Magma& m) {
               return is_associative(m).holds;
             }).size());

  EnumerationConstraints comm_assoc;
  comm_assoc.order = 3;
  comm_assoc.require.commutative = true;
  comm_assoc.require.associative = true;
  CHECK(count_magmas(comm_assoc) == 63);

  EnumerationConstraints canc;
  canc.order = 3;
  canc.require.cancellative = true;
  CHECK(count_magmas(canc) ==
        brute_filter(3, [](const Magma& m) { return is_cancellative(m).holds; })
            .size());
}

TEST_CASE("labeled right modular counts") {
  for (const auto& [order, expected] :
       std::vector<std::pair<int, std::uint64_t>>{{1, 1}, {2, 6}, {3, 105}}) {
    EnumerationConstraints c;
    c.order = order;
    c.require.right_modular = true;
    CHECK(count_magmas(c) == expected);
  }
}

TEST_CASE("idempotent constraint fixes the diagonal") {
  EnumerationConstraints c;
  c.order = 3;
  c.require.idempotent = true;
  c.require.right_modular = true;
  c.require.not_associative = true;
  CHECK(count_magmas(c) == 0);

  // conflicting fixed diagonal: no tables, no error
  EnumerationConstraints conflict;
  conflict.order = 2;
  conflict.require.idempotent = true;
  conflict.fixed_cells.assign(4, std::nullopt);
  conflict.fixed_cells[0] = 1;
  CHECK(count_magmas(conflict) == 0);
}

TEST_CASE("stream is lexicographic and stoppable") {
  EnumerationConstraints c;
  c.order = 2;
  const auto all = collect(c);
  REQUIRE(all.size() == 16);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].table() < all[i].table());
  CHECK(all.front() == Magma(2, {0, 0, 0, 0}));

  int seen = 0;
  for_each_magma(c, [&](const Magma&) { return ++seen < 3; });
  CHECK(seen == 3);

  EnumerationConstraints rm3;
  rm3.order = 3;
  rm3.require.right_modular = true;
  CHECK(collect(rm3).front() == Magma(3));  // the null table comes first
}

TEST_CASE("shard streams concatenate to the full stream") {
  EnumerationConstraints c;
  c.order = 3;
  c.require.right_modular = true;
  const auto whole = collect(c);
  for (int min_shards : {2, 7, 30}) {
    std::vector<Magma> merged;
    for (const auto& shard : shard_constraints(c, min_shards))
      for (const auto& m : collect(shard)) merged.push_back(m);
    REQUIRE(merged.size() == whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i)
      CHECK(merged[i] == whole[i]);
  }
}

TEST_CASE("capacity gate") {
  EnumerationConstraints bare4;
  bare4.order = 4;
  CHECK_THROWS_AS(count_magmas(bare4), CapacityError);
  EnumerationConstraints huge;
  huge.order = 13;
  CHECK_THROWS_AS(count_magmas(huge), CapacityError);

  EnumerationConstraints rm4;
  rm4.order = 4;
  rm4.require.right_modular = true;
  CHECK_NOTHROW(check_enumeration_feasible(rm4));

  EnumerationConstraints bad;
  bad.order = 2;
  bad.fixed_cells.assign(3, std::nullopt);
  CHECK_THROWS_AS(count_magmas(bad), ArgumentError);

  EnumerationConstraints bad_value;
  bad_value.order = 2;
  bad_value.fixed_cells.assign(4, std::nullopt);
  bad_value.fixed_cells[0] = 5;
  CHECK_THROWS_AS(count_magmas(bad_value), ArgumentError);

  EnumerationConstraints bad_domain;
  bad_domain.order = 2;
  bad_domain.free_cell_domain = ElementSet(3, {0});
  CHECK_THROWS_AS(count_magmas(bad_domain), ArgumentError);
}

#include <doctest.h>

#include <numeric>
#include <random>

#include "rmg/fixtures.hpp"
#include "rmg/morphisms.hpp"

using namespace rmg;

namespace {

Magma random_magma(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> value(0, order - 1);
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (auto& v : table) v = value(rng);
  return Magma(order, std::move(table));
}

Permutation random_permutation(std::mt19937& rng, int order) {
  Permutation p = Permutation::identity(order);
  std::shuffle(p.map.begin(), p.map.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("apply_permutation") {
  const Magma& w = fixture("W");
  CHECK(apply_permutation(w, Permutation::identity(4)) == w);

  // swap the elements named 1 and 2
  const Permutation swap01{{1, 0, 2, 3}};
  const Magma relabeled = apply_permutation(w, swap01);
  CHECK(relabeled.op(1, 0) == 2);  // p(W[0][1]) = p(2) = 2
  CHECK((*relabeled.names())[0] == "2");
  CHECK(apply_permutation(relabeled, swap01.inverse()) == w);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + trial % 6;
    const Magma m = random_magma(rng, order);
    const Permutation p = random_permutation(rng, order);
    CHECK(apply_permutation(apply_permutation(m, p), p.inverse()) == m);
  }

  CHECK_THROWS_AS(apply_permutation(w, Permutation::identity(3)), ArgumentError);
  CHECK_THROWS_AS(apply_permutation(w, Permutation{{0, 0, 1, 2}}), ArgumentError);
}

TEST_CASE("is_isomorphic") {
  const Magma& w = fixture("W");
  const auto self = is_isomorphic(w, w);
  REQUIRE(self.has_value());
  CHECK(self->map == Permutation::identity(4).map);

  CHECK_FALSE(is_isomorphic(w, fixture("C1")).has_value());

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + trial % 5;
    const Magma m = random_magma(rng, order);
    const Permutation p = random_permutation(rng, order);
    const Magma relabeled = apply_permutation(m, p);
    const auto found = is_isomorphic(m, relabeled);
    REQUIRE(found.has_value());
    CHECK(apply_permutation(m, *found) == relabeled);
    // symmetry
    CHECK(is_isomorphic(relabeled, m).has_value());
  }

  CHECK_THROWS_AS(is_isomorphic(Magma(9), Magma(9)), CapacityError);
}

TEST_CASE("canonical form of W is W itself") {
  const Magma canon = canonical_form(fixture("W"));
  CHECK(canon.table() == fixture("W").table());
  CHECK_FALSE(canon.names().has_value());
}

TEST_CASE("canonical form is constant on isomorphism orbits") {
  CHECK(canonical_form(Magma(1)) == Magma(1));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = 1 + trial % 5;
    const Magma m = random_magma(rng, order);
    const Permutation p = random_permutation(rng, order);
    CHECK(canonical_form(m) == canonical_form(apply_permutation(m, p)));
  }
}

TEST_CASE("equal canonical forms characterize isomorphism") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 1 + trial % 4;
    const Magma a = random_magma(rng, order);
    const Magma b = random_magma(rng, order);
    CHECK((canonical_form(a) == canonical_form(b)) ==
          is_isomorphic(a, b).has_value());
  }
  CHECK_THROWS_AS(canonical_form(Magma(9)), CapacityError);
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rmg/fixtures.hpp"
#include "rmg/harness.hpp"
#include "rmg/identities.hpp"
#include "rmg/inflation.hpp"

using namespace rmg;

TEST_CASE("example2 consistency suite") {
  const auto r = verify_example2();
  CHECK(r.ok());
  for (const char* key :
       {"ex2.printed-not-associative", "ex2.noted-instance",
        "ex2.printed-not-right-modular", "ex2.printed-not-inflation",
        "ex2.printed-gen-inflation", "ex2.maps-verify-derived",
        "ex2.maps-fail-printed-at-ax", "ex2.tables-differ-only-at-ax",
        "ex2.derived-from-maps"})
    CHECK(r.count(key) == 1);
}

TEST_CASE("uniqueness of W") {
  const auto r = verify_w_uniqueness();
  CHECK(r.ok());
  CHECK(r.count("uniqueness.nonassoc-idem-rm.order2") == 0);
  CHECK(r.count("uniqueness.nonassoc-idem-rm.order3") == 0);
  CHECK(r.count("uniqueness.nonassoc-idem-rm.order4") == 2);
  CHECK(r.count("uniqueness.order4-classes") == 1);
  CHECK(r.count("uniqueness.order4-is-w") == 1);
  CHECK(r.count("uniqueness.w-orbit-size") == 2);
}

TEST_CASE("medial and cancellation sweep to order 3") {
  const auto r = verify_medial_and_cancellation(3);
  CHECK(r.ok());
  CHECK(r.count("rm-tables.order1") == 1);
  CHECK(r.count("rm-tables.order2") == 6);
  CHECK(r.count("rm-tables.order3") == 105);
  CHECK_THROWS_AS(r.count("rm-tables.order9"), ArgumentError);
}

TEST_CASE("base-hypothesis sweeps at reduced bounds") {
  SweepBounds bounds;
  bounds.one_point_max_order = 3;
  bounds.two_point_max_order = 2;

  const auto rc = verify_right_cancellative_bases(bounds);
  CHECK(rc.ok());
  CHECK(rc.count("sweep-right-cancellative.one-point.order1.instances") == 1);
  CHECK(rc.count("sweep-right-cancellative.one-point.order2.instances") == 4);
  CHECK(rc.count("sweep-right-cancellative.one-point.order3.instances") == 18);
  CHECK(rc.count("sweep-right-cancellative.two-point.order2.instances") == 8);

  const auto uog = verify_union_of_groups_bases(bounds);
  CHECK(uog.ok());
  CHECK(uog.count("sweep-union-of-groups.one-point.order2.instances") == 8);
  CHECK(uog.count("sweep-union-of-groups.one-point.order3.instances") == 72);
  CHECK(uog.count("sweep-union-of-groups.two-point.order2.instances") == 16);

  const auto lid = verify_left_identity_bases(bounds);
  CHECK(lid.ok());
  CHECK(lid.count("sweep-left-identity.one-point.order2.instances") == 8);
  CHECK(lid.count("sweep-left-identity.one-point.order3.instances") == 90);
  CHECK(lid.count("sweep-left-identity.two-point.order2.instances") == 16);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  SweepBounds bounds;
  bounds.one_point_max_order = 3;
  bounds.two_point_max_order = 2;
  const auto a = verify_right_cancellative_bases(bounds, 1);
  const auto b = verify_right_cancellative_bases(bounds, 4);
  CHECK(a.counts == b.counts);
  CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("extension equivalence harness") {
  const auto r = verify_extension_equivalence(5000);
  CHECK(r.ok());
  CHECK(r.count("extension-equivalence.bases.order3") == 105);
  CHECK(r.count("extension-equivalence.exhaustive-specs") == 229828);
}

TEST_CASE("hunts at small bounds find nothing") {
  HuntBounds small;
  small.max_sub_order = 2;
  small.max_adjoined = 2;
  const auto r = hunt_strict_gen_inflations(HuntMode::right_modular, small);
  CHECK(r.violations.empty());
  CHECK(r.count("hunt-right-modular.counterexamples") == 0);
  // 1 + 1 extensions of the order-1 base, 10 + 18 over the six order-2 bases
  CHECK(r.count("hunt-right-modular.instances") == 30);
  bool has_certificate = false;
  for (const auto& note : r.notes)
    if (note.find("no counterexample within bounds") != std::string::npos)
      has_certificate = true;
  CHECK(has_certificate);
}

TEST_CASE("one-point hunts reproduce the recorded counterexample counts") {
  HuntBounds bounds;
  bounds.max_sub_order = 3;
  bounds.max_adjoined = 1;

  const auto rm = hunt_strict_gen_inflations(HuntMode::right_modular, bounds);
  CHECK(rm.count("hunt-right-modular.counterexamples") == 402);
  CHECK(rm.count("hunt-right-modular.instances") == 680);

  const auto cs =
      hunt_strict_gen_inflations(HuntMode::commutative_semigroup, bounds);
  CHECK(cs.count("hunt-commutative-semigroup.counterexamples") == 36);
  CHECK(cs.count("hunt-commutative-semigroup.instances") == 200);

  // each reported counterexample re-verifies: a generalised inflation of its
  // base with no retraction onto it
  int checked = 0;
  for (const auto& v : cs.violations) {
    if (++checked > 5) break;
    const int base_order = v.instance.order() - 1;
    ElementSet u_set(v.instance.order());
    for (Element e = 0; e < base_order; ++e) u_set.insert(e);
    CHECK(is_associative(v.instance).holds);
    CHECK(find_gen_inflation(v.instance, u_set).has_value());
    CHECK_FALSE(find_retraction(v.instance, u_set).has_value());
  }
  checked = 0;
  for (const auto& v : rm.violations) {
    if (++checked > 5) break;
    const int base_order = v.instance.order() - 1;
    ElementSet u_set(v.instance.order());
    for (Element e = 0; e < base_order; ++e) u_set.insert(e);
    CHECK(is_right_modular(v.instance).holds);
    CHECK(find_gen_inflation(v.instance, u_set).has_value());
    CHECK_FALSE(find_retraction(v.instance, u_set).has_value());
  }
}

TEST_CASE("hunt determinism across worker counts") {
  HuntBounds bounds;
  bounds.max_sub_order = 3;
  bounds.max_adjoined = 1;
  const auto a =
      hunt_strict_gen_inflations(HuntMode::commutative_semigroup, bounds, 1);
  const auto b =
      hunt_strict_gen_inflations(HuntMode::commutative_semigroup, bounds, 4);
  CHECK(a.counts == b.counts);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i)
    CHECK(a.violations[i].instance == b.violations[i].instance);
  CHECK(format_report(a) == format_report(b));
}

TEST_CASE("pinned counts match the checked-in golden file") {
  std::ifstream in(RMG_GOLDEN_FILE, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto golden = parse_pinned_counts(buf.str());
  CHECK(golden == pinned_counts());
}

TEST_CASE("pinned count parser") {
  const auto parsed = parse_pinned_counts(
      "# comment\n"
      "a.b = 3\n"
      "\n"
      "c = 42   # trailing\n");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed.at("a.b") == 3);
  CHECK(parsed.at("c") == 42);
  CHECK_THROWS_AS(parse_pinned_counts("oops\n"), ParseError);
}

TEST_CASE("report formatting is stable") {
  const auto r = verify_example2();
  const std::string text = format_report(r);
  CHECK(text.find("== example2 ==") == 0);
  CHECK(text.find("violations: none") != std::string::npos);
  CHECK(text == format_report(verify_example2()));
}

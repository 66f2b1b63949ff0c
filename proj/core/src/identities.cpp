#include "rmg/identities.hpp"

#include <cassert>

#include "rmg/config.hpp"
#include "raw_checks.hpp"

namespace rmg {

namespace {

PropertyReport holds_report() { return {true, std::nullopt, ""}; }

template <std::size_t K>
PropertyReport fail_report(const std::array<Element, K>& w,
                           std::string detail = "") {
  return {false, std::vector<Element>(w.begin(), w.end()), std::move(detail)};
}

}  // namespace

PropertyReport is_right_modular(const Magma& m) {
  if (auto w = raw::right_modular_violation(m.table().data(), m.order()))
    return fail_report(*w);
  return holds_report();
}

PropertyReport is_medial(const Magma& m) {
  if (auto w = raw::medial_violation(m.table().data(), m.order()))
    return fail_report(*w);
  return holds_report();
}

PropertyReport is_associative(const Magma& m) {
  if (auto w = raw::associativity_violation(m.table().data(), m.order()))
    return fail_report(*w);
  return holds_report();
}

PropertyReport is_idempotent(const Magma& m) {
  for (Element x = 0; x < m.order(); ++x)
    if (m.op(x, x) != x) return fail_report(std::array<Element, 1>{x});
  return holds_report();
}

PropertyReport is_commutative(const Magma& m) {
  for (Element x = 0; x < m.order(); ++x)
    for (Element y = 0; y < m.order(); ++y)
      if (m.op(x, y) != m.op(y, x))
        return fail_report(std::array<Element, 2>{x, y});
  return holds_report();
}

ElementSet left_identities(const Magma& m) {
  ElementSet out(m.order());
  for (Element e = 0; e < m.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < m.order() && ok; ++x) ok = m.op(e, x) == x;
    if (ok) out.insert(e);
  }
  return out;
}

PropertyReport is_right_cancellative(const Magma& m) {
  for (Element a = 0; a < m.order(); ++a)
    for (Element b = 0; b < m.order(); ++b) {
      if (a == b) continue;
      for (Element c = 0; c < m.order(); ++c)
        if (m.op(a, c) == m.op(b, c))
          return fail_report(std::array<Element, 3>{a, b, c}, "right");
    }
  return holds_report();
}

PropertyReport is_left_cancellative(const Magma& m) {
  for (Element a = 0; a < m.order(); ++a)
    for (Element b = 0; b < m.order(); ++b) {
      if (a == b) continue;
      for (Element c = 0; c < m.order(); ++c)
        if (m.op(c, a) == m.op(c, b))
          return fail_report(std::array<Element, 3>{a, b, c}, "left");
    }
  return holds_report();
}

PropertyReport is_cancellative(const Magma& m) {
  if (auto r = is_right_cancellative(m); !r.holds) return r;
  return is_left_cancellative(m);
}

PropertyReport is_quasigroup(const Magma& m) {
  const bool latin = raw::rows_are_permutations(m.table().data(), m.order()) &&
                     raw::columns_are_permutations(m.table().data(), m.order());
  PropertyReport canc = is_cancellative(m);
  assert(latin == canc.holds);
  if (latin) return holds_report();
  return canc;
}

std::vector<ElementSet> group_subsets(const Magma& m) {
  const int n = m.order();
  if (n > Config::get().subset_search_max_order)
    throw CapacityError("group subset search bounded to order " +
                        std::to_string(Config::get().subset_search_max_order));
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto in = [&](Element e) { return (mask >> e & 1u) != 0; };
    std::vector<Element> members;
    for (Element e = 0; e < n; ++e)
      if (in(e)) members.push_back(e);

    bool ok = true;
    for (Element a : members) {
      for (Element b : members)
        if (!in(m.op(a, b))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;

    for (Element a : members) {
      for (Element b : members) {
        for (Element c : members)
          if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (!ok) continue;

    Element identity = -1;
    for (Element e : members) {
      bool is_id = true;
      for (Element a : members)
        if (m.op(e, a) != a || m.op(a, e) != a) {
          is_id = false;
          break;
        }
      if (is_id) {
        identity = e;
        break;
      }
    }
    if (identity < 0) continue;

    for (Element a : members) {
      bool has_inverse = false;
      for (Element b : members)
        if (m.op(a, b) == identity && m.op(b, a) == identity) {
          has_inverse = true;
          break;
        }
      if (!has_inverse) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    out.emplace_back(n, members);
  }
  return out;
}

PropertyReport is_union_of_groups(const Magma& m) {
  const auto groups = group_subsets(m);
  std::uint32_t covered = 0;
  for (const auto& g : groups) covered |= g.mask();
  for (Element e = 0; e < m.order(); ++e)
    if (!(covered >> e & 1u))
      return fail_report(std::array<Element, 1>{e}, "uncovered");
  return holds_report();
}

}  // namespace rmg

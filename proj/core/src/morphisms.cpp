#include "rmg/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "rmg/config.hpp"

namespace rmg {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map.resize(map.size());
  for (Element i = 0; i < order(); ++i) inv.map[map[i]] = i;
  return inv;
}

bool Permutation::valid() const {
  const int n = order();
  std::uint32_t seen = 0;
  for (Element v : map) {
    if (v < 0 || v >= n || (seen >> v & 1u)) return false;
    seen |= 1u << v;
  }
  return true;
}

Magma apply_permutation(const Magma& m, const Permutation& p) {
  if (p.order() != m.order())
    throw ArgumentError("permutation order " + std::to_string(p.order()) +
                        " does not match magma order " +
                        std::to_string(m.order()));
  if (!p.valid()) throw ArgumentError("mapping is not a permutation");
  const int n = m.order();
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[p(a) * n + p(b)] = p(m.op(a, b));
  std::optional<std::vector<std::string>> names;
  if (m.names()) {
    names.emplace(n);
    for (Element a = 0; a < n; ++a) (*names)[p(a)] = (*m.names())[a];
  }
  return Magma(n, std::move(table), std::move(names));
}

namespace {

void check_iso_capacity(int n) {
  if (n > Config::get().iso_max_order)
    throw CapacityError("isomorphism search bounded to order " +
                        std::to_string(Config::get().iso_max_order));
}

// DFS over images of 0..n-1 in ascending value order; prunes on the first
// cell (a, b) whose image is fully determined and diverges.
bool extend_iso(const Magma& m1, const Magma& m2, std::vector<Element>& image,
                std::vector<bool>& used, int next) {
  const int n = m1.order();
  if (next == n) return true;
  for (Element v = 0; v < n; ++v) {
    if (used[v]) continue;
    image[next] = v;
    used[v] = true;
    bool ok = true;
    for (Element a = 0; a <= next && ok; ++a)
      for (Element b = 0; b <= next && ok; ++b) {
        const Element p = m1.op(a, b);
        if (p <= next && m2.op(image[a], image[b]) != image[p]) ok = false;
      }
    if (ok && extend_iso(m1, m2, image, used, next + 1)) return true;
    used[v] = false;
  }
  image[next] = -1;
  return false;
}

}  // namespace

std::optional<Permutation> is_isomorphic(const Magma& m1, const Magma& m2) {
  if (m1.order() != m2.order()) return std::nullopt;
  check_iso_capacity(m1.order());
  std::vector<Element> image(m1.order(), -1);
  std::vector<bool> used(m1.order(), false);
  if (!extend_iso(m1, m2, image, used, 0)) return std::nullopt;
  Permutation p{std::move(image)};
  if (!(apply_permutation(m1, p) == m2)) return std::nullopt;  // unreachable
  return p;
}

Magma canonical_form(const Magma& m) {
  const int n = m.order();
  check_iso_capacity(n);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best;
  std::vector<Element> candidate(static_cast<std::size_t>(n) * n);
  do {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        candidate[perm[a] * n + perm[b]] = perm[m.op(a, b)];
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Magma(n, std::move(best));
}

}  // namespace rmg

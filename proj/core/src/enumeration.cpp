#include "rmg/enumeration.hpp"

#include <algorithm>

#include "rmg/config.hpp"
#include "raw_checks.hpp"

namespace rmg {

namespace {

constexpr Element kUndefined = -1;

struct Searcher {
  int n;
  RequireFlags flags;
  std::vector<Element> table;       // n*n, kUndefined for unassigned
  std::vector<int> free_cells;      // row-major indices
  std::vector<Element> domain;      // ascending values for free cells
  const std::function<bool(const Magma&)>* visit = nullptr;
  std::uint64_t leaves = 0;
  bool stopped = false;

  // Checks every identity instance that is fully defined and involves the
  // newly assigned cell; earlier instances stay valid because cells are
  // never reassigned on the current path.
  bool consistent_after(int cell) const {
    const int r = cell / n, c = cell % n;
    const Element v = table[cell];

    if (flags.commutative) {
      const Element mirror = table[c * n + r];
      if (mirror != kUndefined && mirror != v) return false;
    }
    if (flags.cancellative || flags.right_cancellative) {
      for (int a = 0; a < n; ++a)
        if (a != r && table[a * n + c] == v) return false;
    }
    if (flags.cancellative) {
      for (int b = 0; b < n; ++b)
        if (b != c && table[r * n + b] == v) return false;
    }
    if (flags.right_modular && !right_modular_partial(r, c)) return false;
    if (flags.associative && !associative_partial(r, c)) return false;
    if (flags.medial && !medial_partial(r, c)) return false;
    return true;
  }

  bool right_modular_partial(int r, int c) const {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element xy = table[x * n + y];
        if (xy == kUndefined) continue;
        bool involved_xy = (x == r && y == c);
        for (Element z = 0; z < n; ++z) {
          const Element l = table[xy * n + z];
          if (l == kUndefined) continue;
          const Element zy = table[z * n + y];
          if (zy == kUndefined) continue;
          const Element rr = table[zy * n + x];
          if (rr == kUndefined) continue;
          const bool involved = involved_xy || (xy == r && z == c) ||
                                (z == r && y == c) || (zy == r && x == c);
          if (involved && l != rr) return false;
        }
      }
    return true;
  }

  bool associative_partial(int r, int c) const {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element xy = table[x * n + y];
        if (xy == kUndefined) continue;
        bool involved_xy = (x == r && y == c);
        for (Element z = 0; z < n; ++z) {
          const Element l = table[xy * n + z];
          if (l == kUndefined) continue;
          const Element yz = table[y * n + z];
          if (yz == kUndefined) continue;
          const Element rr = table[x * n + yz];
          if (rr == kUndefined) continue;
          const bool involved = involved_xy || (xy == r && z == c) ||
                                (y == r && z == c) || (x == r && yz == c);
          if (involved && l != rr) return false;
        }
      }
    return true;
  }

  bool medial_partial(int r, int c) const {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = table[a * n + b];
        if (ab == kUndefined) continue;
        for (Element cc = 0; cc < n; ++cc) {
          const Element ac = table[a * n + cc];
          if (ac == kUndefined) continue;
          for (Element d = 0; d < n; ++d) {
            const Element cd = table[cc * n + d];
            if (cd == kUndefined) continue;
            const Element l = table[ab * n + cd];
            if (l == kUndefined) continue;
            const Element bd = table[b * n + d];
            if (bd == kUndefined) continue;
            const Element rr = table[ac * n + bd];
            if (rr == kUndefined) continue;
            const bool involved =
                (a == r && b == c) || (cc == r && d == c) ||
                (ab == r && cd == c) || (a == r && cc == c) ||
                (b == r && d == c) || (ac == r && bd == c);
            if (involved && l != rr) return false;
          }
        }
      }
    return true;
  }

  bool leaf_accepted() const {
    if (flags.not_associative &&
        !raw::associativity_violation(table.data(), n).has_value())
      return false;
    return true;
  }

  void emit() {
    ++leaves;
    if (!visit) return;
    Magma m(n, table);
    if (!(*visit)(m)) stopped = true;
  }

  void search(std::size_t depth) {
    if (stopped) return;
    if (depth == free_cells.size()) {
      if (leaf_accepted()) emit();
      return;
    }
    const int cell = free_cells[depth];
    for (Element v : domain) {
      table[cell] = v;
      if (consistent_after(cell)) search(depth + 1);
      if (stopped) break;
    }
    table[cell] = kUndefined;
  }
};

// Whether setup is trivially unsatisfiable (conflicting fixed cells).
std::optional<Searcher> prepare(const EnumerationConstraints& c) {
  const int n = c.order;
  if (n < 1) throw ArgumentError("order must be >= 1");
  if (n > Config::get().max_order)
    throw CapacityError("order " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(Config::get().max_order));
  if (!c.fixed_cells.empty() &&
      c.fixed_cells.size() != static_cast<std::size_t>(n) * n)
    throw ArgumentError("fixed_cells must have order^2 entries when present");

  Searcher s;
  s.n = n;
  s.flags = c.require;
  s.table.assign(static_cast<std::size_t>(n) * n, kUndefined);

  for (std::size_t i = 0; i < c.fixed_cells.size(); ++i) {
    if (!c.fixed_cells[i]) continue;
    const Element v = *c.fixed_cells[i];
    if (v < 0 || v >= n) throw ArgumentError("fixed cell value outside carrier");
    s.table[i] = v;
  }
  if (c.require.idempotent) {
    for (Element x = 0; x < n; ++x) {
      Element& cell = s.table[x * n + x];
      if (cell != kUndefined && cell != x) return std::nullopt;
      cell = x;
    }
  }

  if (c.free_cell_domain) {
    if (c.free_cell_domain->carrier_order() != n)
      throw ArgumentError("free-cell domain carrier does not match order");
    s.domain = c.free_cell_domain->members();
  } else {
    s.domain.resize(n);
    for (Element v = 0; v < n; ++v) s.domain[v] = v;
  }

  for (int i = 0; i < n * n; ++i)
    if (s.table[i] == kUndefined) s.free_cells.push_back(i);

  // Fixed cells must already be mutually consistent with the pruning
  // identities; check each as if just assigned.
  for (int i = 0; i < n * n; ++i)
    if (s.table[i] != kUndefined && !s.consistent_after(i)) return std::nullopt;

  return s;
}

}  // namespace

void check_enumeration_feasible(const EnumerationConstraints& c) {
  const int n = c.order;
  if (n < 1) throw ArgumentError("order must be >= 1");
  if (n > Config::get().max_order)
    throw CapacityError("order " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(Config::get().max_order));

  std::size_t fixed = 0;
  for (const auto& cell : c.fixed_cells)
    if (cell) ++fixed;
  std::size_t free_cells = static_cast<std::size_t>(n) * n - fixed;
  if (c.require.idempotent) {
    // diagonal cells count as fixed (over-counts any fixed diagonal cell
    // already counted, so recompute precisely)
    free_cells = 0;
    for (int i = 0; i < n * n; ++i) {
      const bool has_fixed =
          !c.fixed_cells.empty() && c.fixed_cells[i].has_value();
      const bool diagonal = (i / n) == (i % n);
      if (!has_fixed && !diagonal) ++free_cells;
    }
  }
  const std::size_t d =
      c.free_cell_domain ? c.free_cell_domain->members().size() : n;

  long double raw = 1;
  for (std::size_t i = 0; i < free_cells; ++i) raw *= static_cast<long double>(d);

  const auto& cfg = Config::get();
  if (raw <= static_cast<long double>(cfg.enum_raw_cap)) return;
  if (c.require.any_pruning() && n <= cfg.enum_pruned_max_order) return;
  throw CapacityError(
      "enumeration infeasible: " + std::to_string(d) + "^" +
      std::to_string(free_cells) + " ~ " +
      std::to_string(static_cast<double>(raw)) +
      " raw assignments exceed the cap and no pruning identity applies");
}

void for_each_magma(const EnumerationConstraints& c,
                    const std::function<bool(const Magma&)>& visit) {
  check_enumeration_feasible(c);
  auto searcher = prepare(c);
  if (!searcher) return;
  searcher->visit = &visit;
  searcher->search(0);
}

std::uint64_t count_magmas(const EnumerationConstraints& c) {
  check_enumeration_feasible(c);
  auto searcher = prepare(c);
  if (!searcher) return 0;
  searcher->search(0);
  return searcher->leaves;
}

std::vector<EnumerationConstraints> shard_constraints(
    const EnumerationConstraints& c, int min_shards) {
  const int n = c.order;
  std::vector<int> free_cells;
  {
    auto searcher = prepare(c);
    if (!searcher) return {};  // unsatisfiable; zero shards
    free_cells = searcher->free_cells;
  }
  std::vector<Element> domain;
  if (c.free_cell_domain)
    domain = c.free_cell_domain->members();
  else
    for (Element v = 0; v < n; ++v) domain.push_back(v);
  const std::size_t d = domain.size();
  if (d == 0 && !free_cells.empty()) return {};

  std::size_t prefix = 0;
  std::uint64_t shards = 1;
  while (prefix < free_cells.size() &&
         shards < static_cast<std::uint64_t>(min_shards)) {
    shards *= d;
    ++prefix;
  }

  std::vector<EnumerationConstraints> out;
  out.reserve(shards);
  for (std::uint64_t id = 0; id < shards; ++id) {
    EnumerationConstraints sub = c;
    if (sub.fixed_cells.empty())
      sub.fixed_cells.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    std::uint64_t rest = id;
    // big-endian digits so shard order matches lexicographic order
    for (std::size_t i = 0; i < prefix; ++i) {
      std::uint64_t scale = 1;
      for (std::size_t j = i + 1; j < prefix; ++j) scale *= d;
      sub.fixed_cells[free_cells[i]] = domain[(rest / scale) % d];
      rest %= scale;
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace rmg

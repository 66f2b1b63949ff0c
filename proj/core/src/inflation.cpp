#include "rmg/inflation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

#include "rmg/config.hpp"

namespace rmg {

namespace {

void check_u_set(const Magma& g, const ElementSet& u_set) {
  if (u_set.carrier_order() != g.order())
    throw ArgumentError("subgroupoid carrier does not match magma order");
  if (u_set.empty()) throw ArgumentError("subgroupoid must be nonempty");
}

void require_closed(const Magma& g, const ElementSet& u_set) {
  check_u_set(g, u_set);
  if (!is_closed(g, u_set)) {
    for (Element a : u_set.members())
      for (Element b : u_set.members())
        if (!u_set.contains(g.op(a, b)))
          throw PreconditionError("subgroupoid not closed: " +
                                  g.element_name(a) + " * " + g.element_name(b) +
                                  " = " + g.element_name(g.op(a, b)));
  }
}

std::vector<Element> outside_elements(const Magma& g, const ElementSet& u_set) {
  std::vector<Element> out;
  for (Element e = 0; e < g.order(); ++e)
    if (!u_set.contains(e)) out.push_back(e);
  return out;
}

}  // namespace

PropertyReport verify_retraction(const Magma& g, const ElementSet& u_set,
                                 const RetractionWitness& w) {
  require_closed(g, u_set);
  const int n = g.order();
  if (static_cast<int>(w.phi.size()) != n)
    throw StructuralError("phi must be defined on the whole carrier");
  for (Element x = 0; x < n; ++x)
    if (!u_set.contains(w.phi[x]))
      throw StructuralError("phi(" + g.element_name(x) +
                            ") lies outside the subgroupoid");
  for (Element u : u_set.members())
    if (w.phi[u] != u)
      return {false, std::vector<Element>{u}, "phi does not fix " + g.element_name(u)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.op(x, y) != g.op(w.phi[x], w.phi[y]))
        return {false,
                std::vector<Element>{x, y},
                "cell (" + g.element_name(x) + ", " + g.element_name(y) +
                    "): table has " + g.element_name(g.op(x, y)) +
                    ", phi gives " + g.element_name(g.op(w.phi[x], w.phi[y]))};
  return {true, std::nullopt, ""};
}

std::optional<RetractionWitness> find_retraction(const Magma& g,
                                                 const ElementSet& u_set) {
  require_closed(g, u_set);
  const int n = g.order();
  const auto members = u_set.members();
  const auto outside = outside_elements(g, u_set);
  const int m = static_cast<int>(outside.size());

  RetractionWitness w;
  w.phi.resize(n);
  for (Element e = 0; e < n; ++e) w.phi[e] = e;
  if (m == 0) return w;

  if (!square_set(g).subset_of(u_set)) return std::nullopt;

  // Border conditions x*v = phi(x)*v and v*x = v*phi(x) restrict candidates;
  // with a left identity e in U they force phi(x) = e*x.
  std::vector<std::vector<Element>> cand(m);
  for (int i = 0; i < m; ++i) {
    const Element x = outside[i];
    for (Element u : members) {
      bool ok = true;
      for (Element v : members)
        if (g.op(x, v) != g.op(u, v) || g.op(v, x) != g.op(v, u)) {
          ok = false;
          break;
        }
      if (ok) cand[i].push_back(u);
    }
    if (cand[i].empty()) return std::nullopt;
  }

  std::vector<Element> img(m, -1);
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    const Element x = outside[i];
    for (Element u : cand[i]) {
      bool ok = g.op(x, x) == g.op(u, u);
      for (int j = 0; j < i && ok; ++j) {
        const Element y = outside[j];
        ok = g.op(x, y) == g.op(u, img[j]) && g.op(y, x) == g.op(img[j], u);
      }
      if (!ok) continue;
      img[i] = u;
      if (self(self, i + 1)) return true;
      img[i] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  for (int i = 0; i < m; ++i) w.phi[outside[i]] = img[i];
  assert(verify_retraction(g, u_set, w).holds);
  return w;
}

PropertyReport verify_gen_inflation(const Magma& g, const ElementSet& u_set,
                                    const GenInflationWitness& w) {
  require_closed(g, u_set);
  const int n = g.order();
  const auto members = u_set.members();
  const int k = static_cast<int>(members.size());

  if (static_cast<int>(w.cls.size()) != n ||
      static_cast<int>(w.alpha.size()) != n ||
      static_cast<int>(w.beta.size()) != n)
    throw StructuralError("witness maps must cover the whole carrier");
  for (Element x = 0; x < n; ++x) {
    if (!u_set.contains(w.cls[x]))
      throw StructuralError("class of " + g.element_name(x) +
                            " lies outside the subgroupoid");
    if (static_cast<int>(w.alpha[x].size()) != k ||
        static_cast<int>(w.beta[x].size()) != k)
      throw StructuralError("alpha/beta of " + g.element_name(x) +
                            " must be maps on the subgroupoid");
    for (int j = 0; j < k; ++j)
      if (!u_set.contains(w.alpha[x][j]) || !u_set.contains(w.beta[x][j]))
        throw StructuralError("alpha/beta image of " + g.element_name(x) +
                              " lies outside the subgroupoid");
  }

  std::vector<int> pos(n, -1);
  for (int j = 0; j < k; ++j) pos[members[j]] = j;

  for (Element u : members)
    if (w.cls[u] != u)
      return {false, std::vector<Element>{u},
              "class does not fix " + g.element_name(u)};
  for (Element u : members)
    for (int j = 0; j < k; ++j)
      if (w.alpha[u][j] != u || w.beta[u][j] != u)
        return {false, std::vector<Element>{u},
                "maps of " + g.element_name(u) + " must be the constant map"};

  // Product law; cells with both factors in U also re-check that the product
  // in U is preserved.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element law =
          g.op(w.alpha[x][pos[w.cls[y]]], w.beta[y][pos[w.cls[x]]]);
      if (law != g.op(x, y))
        return {false,
                std::vector<Element>{x, y},
                "cell (" + g.element_name(x) + ", " + g.element_name(y) +
                    "): law gives " + g.element_name(law) + ", table has " +
                    g.element_name(g.op(x, y))};
    }
  return {true, std::nullopt, ""};
}

std::optional<GenInflationWitness> find_gen_inflation(const Magma& g,
                                                      const ElementSet& u_set) {
  require_closed(g, u_set);
  const int n = g.order();
  const auto members = u_set.members();
  const int k = static_cast<int>(members.size());
  const auto outside = outside_elements(g, u_set);
  const int m = static_cast<int>(outside.size());

  GenInflationWitness w;
  w.cls.resize(n);
  w.alpha.assign(n, std::vector<Element>(k, 0));
  w.beta.assign(n, std::vector<Element>(k, 0));
  for (Element u : members) {
    w.cls[u] = u;
    w.alpha[u].assign(k, u);
    w.beta[u].assign(k, u);
  }
  if (m == 0) return w;

  if (m > Config::get().max_adjoined(k))
    throw CapacityError("generalised-inflation search bounded to " +
                        std::to_string(Config::get().max_adjoined(k)) +
                        " adjoined elements for a subgroupoid of order " +
                        std::to_string(k));

  if (!square_set(g).subset_of(u_set)) return std::nullopt;

  // Border candidate masks over member positions: for x outside and u in U,
  // x*u = (u alpha_x)*u and u*x = u*(beta_x u).
  std::vector<std::uint32_t> cand_a(m * k, 0), cand_b(m * k, 0);
  for (int i = 0; i < m; ++i) {
    const Element x = outside[i];
    for (int j = 0; j < k; ++j) {
      const Element u = members[j];
      for (int a = 0; a < k; ++a)
        if (g.op(members[a], u) == g.op(x, u)) cand_a[i * k + j] |= 1u << a;
      for (int b = 0; b < k; ++b)
        if (g.op(u, members[b]) == g.op(u, x)) cand_b[i * k + j] |= 1u << b;
      if (!cand_a[i * k + j] || !cand_b[i * k + j]) return std::nullopt;
    }
  }

  // DFS in witness comparison order: classes, then alpha values, then beta
  // values; beta candidate sets are refined as alpha values commit, so the
  // beta phase is forced.
  std::vector<int> cls_pos(m, -1);
  std::vector<int> alpha_pos(m * k, -1);
  std::vector<std::uint32_t> cand_b2 = cand_b;
  struct Refinement {
    int slot;
    std::uint32_t old_mask;
  };
  std::vector<Refinement> trail;

  auto assign_alpha = [&](auto&& self, int i, int j) -> bool {
    if (j == k) return i + 1 == m ? true : self(self, i + 1, 0);
    const Element x = outside[i];
    for (int a = 0; a < k; ++a) {
      if (!(cand_a[i * k + j] >> a & 1u)) continue;
      const std::size_t mark = trail.size();
      bool ok = true;
      // pairs (x, y) with cls(y) = members[j]: refine beta_y at point cls(x)
      for (int i2 = 0; i2 < m && ok; ++i2) {
        if (cls_pos[i2] != j) continue;
        const int slot = i2 * k + cls_pos[i];
        const Element target = g.op(x, outside[i2]);
        std::uint32_t mask = 0;
        for (int b = 0; b < k; ++b)
          if (cand_b2[slot] >> b & 1u)
            if (g.op(members[a], members[b]) == target) mask |= 1u << b;
        if (mask != cand_b2[slot]) {
          trail.push_back({slot, cand_b2[slot]});
          cand_b2[slot] = mask;
        }
        if (!mask) ok = false;
      }
      if (ok) {
        alpha_pos[i * k + j] = a;
        if (self(self, i, j + 1)) return true;
        alpha_pos[i * k + j] = -1;
      }
      while (trail.size() > mark) {
        cand_b2[trail.back().slot] = trail.back().old_mask;
        trail.pop_back();
      }
    }
    return false;
  };

  auto assign_classes = [&](auto&& self, int i) -> bool {
    if (i == m) return assign_alpha(assign_alpha, 0, 0);
    for (int p = 0; p < k; ++p) {
      cls_pos[i] = p;
      if (self(self, i + 1)) return true;
    }
    cls_pos[i] = -1;
    return false;
  };

  if (!assign_classes(assign_classes, 0)) return std::nullopt;

  for (int i = 0; i < m; ++i) {
    const Element x = outside[i];
    w.cls[x] = members[cls_pos[i]];
    for (int j = 0; j < k; ++j) {
      w.alpha[x][j] = members[alpha_pos[i * k + j]];
      w.beta[x][j] = members[std::countr_zero(cand_b2[i * k + j])];
    }
  }
  assert(verify_gen_inflation(g, u_set, w).holds);
  return w;
}

WitnessClassification classify_witness(const GenInflationWitness& w) {
  WitnessClassification c{true, true};
  for (std::size_t x = 0; x < w.cls.size(); ++x) {
    if (w.alpha[x] != w.beta[x]) c.symmetric = false;
    for (std::size_t j = 1; j < w.alpha[x].size(); ++j)
      if (w.alpha[x][j] != w.alpha[x][0]) c.constant = false;
  }
  return c;
}

RetractionWitness constant_witness_to_retraction(const GenInflationWitness& w) {
  const auto c = classify_witness(w);
  if (!c.constant_gen_inflation())
    throw ArgumentError(
        "witness is not a symmetric constant generalised inflation");
  RetractionWitness r;
  r.phi.reserve(w.cls.size());
  for (std::size_t x = 0; x < w.cls.size(); ++x) {
    if (w.alpha[x].empty()) throw ArgumentError("witness has empty maps");
    r.phi.push_back(w.alpha[x][0]);
  }
  return r;
}

GenInflationWitness retraction_to_constant_witness(const Magma& g,
                                                   const ElementSet& u_set,
                                                   const RetractionWitness& w) {
  check_u_set(g, u_set);
  const int n = g.order();
  if (static_cast<int>(w.phi.size()) != n)
    throw ArgumentError("phi must be defined on the whole carrier");
  const int k = u_set.size();
  GenInflationWitness out;
  out.cls = w.phi;
  out.alpha.reserve(n);
  for (Element x = 0; x < n; ++x) {
    if (!u_set.contains(w.phi[x]))
      throw ArgumentError("phi image lies outside the subgroupoid");
    out.alpha.emplace_back(k, w.phi[x]);
  }
  out.beta = out.alpha;
  return out;
}

std::vector<ElementSet> candidate_subgroupoids(const Magma& g) {
  const ElementSet sq = square_set(g);
  std::vector<Element> free;
  for (Element e = 0; e < g.order(); ++e)
    if (!sq.contains(e)) free.push_back(e);
  const int f = static_cast<int>(free.size());

  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << f);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f); ++mask) {
    ElementSet s = sq;
    for (int i = 0; i < f; ++i)
      if (mask >> i & 1u) s.insert(free[i]);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

Magma build_gen_inflation(const Magma& base, const std::vector<Element>& classes,
                          const std::vector<std::vector<Element>>& alphas,
                          const std::vector<std::vector<Element>>& betas) {
  const int n = base.order();
  const int m = static_cast<int>(classes.size());
  if (alphas.size() != classes.size() || betas.size() != classes.size())
    throw ArgumentError("one alpha and beta map required per adjoined element");
  auto check_map = [&](const std::vector<Element>& f) {
    if (static_cast<int>(f.size()) != n)
      throw ArgumentError("maps must be total on the base carrier");
    for (Element v : f)
      if (v < 0 || v >= n) throw ArgumentError("map image outside base carrier");
  };
  for (int i = 0; i < m; ++i) {
    if (classes[i] < 0 || classes[i] >= n)
      throw ArgumentError("class outside base carrier");
    check_map(alphas[i]);
    check_map(betas[i]);
  }

  const int order = n + m;
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * order + b] = base.op(a, b);
  for (int i = 0; i < m; ++i) {
    const Element x = n + i;
    for (Element u = 0; u < n; ++u) {
      table[x * order + u] = base.op(alphas[i][u], u);
      table[u * order + x] = base.op(u, betas[i][u]);
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[(n + i) * order + (n + j)] =
          base.op(alphas[i][classes[j]], betas[j][classes[i]]);

  std::optional<std::vector<std::string>> names;
  if (base.names()) {
    names = *base.names();
    auto taken = [&](const std::string& s) {
      return std::find(names->begin(), names->end(), s) != names->end();
    };
    int suffix = 0;
    for (int i = 0; i < m; ++i) {
      std::string candidate = "x";
      while (taken(candidate)) candidate = "x" + std::to_string(suffix++);
      names->push_back(candidate);
    }
  }
  return Magma(order, std::move(table), std::move(names));
}

namespace {

std::string map_line(const Magma& g, const std::string& label, Element x,
                     const std::vector<Element>& members,
                     const std::vector<Element>& values) {
  std::ostringstream out;
  out << label << '[' << g.element_name(x) << "]:";
  for (std::size_t j = 0; j < members.size(); ++j)
    out << ' ' << g.element_name(members[j]) << "->"
        << g.element_name(values[j]);
  out << '\n';
  return out.str();
}

}  // namespace

std::string format_witness(const Magma& g, const ElementSet& /*u_set*/,
                           const RetractionWitness& w) {
  std::ostringstream out;
  out << "phi:\n";
  for (Element x = 0; x < g.order(); ++x)
    out << g.element_name(x) << " -> " << g.element_name(w.phi[x]) << '\n';
  return out.str();
}

std::string format_witness(const Magma& g, const ElementSet& u_set,
                           const GenInflationWitness& w) {
  const auto members = u_set.members();
  std::ostringstream out;
  out << "class:\n";
  for (Element x = 0; x < g.order(); ++x)
    out << g.element_name(x) << " -> " << g.element_name(w.cls[x]) << '\n';
  for (Element x = 0; x < g.order(); ++x)
    if (!u_set.contains(x)) out << map_line(g, "alpha", x, members, w.alpha[x]);
  for (Element x = 0; x < g.order(); ++x)
    if (!u_set.contains(x)) out << map_line(g, "beta", x, members, w.beta[x]);
  return out.str();
}

}  // namespace rmg

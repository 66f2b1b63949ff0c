#include "rmg/harness.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>

#include "rmg/config.hpp"
#include "rmg/enumeration.hpp"
#include "rmg/extension.hpp"
#include "rmg/fixtures.hpp"
#include "rmg/identities.hpp"
#include "rmg/inflation.hpp"
#include "rmg/morphisms.hpp"
#include "rmg/parallel.hpp"
#include "raw_checks.hpp"

namespace rmg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string flat_table(const Magma& m) {
  std::ostringstream out;
  out << "order " << m.order() << ":";
  for (Element v : m.table()) out << ' ' << v;
  return out.str();
}

std::string base_label(const Magma& base) { return "base " + flat_table(base); }

ElementSet base_carrier_in(const Magma& ext, int base_order) {
  ElementSet s(ext.order());
  for (Element e = 0; e < base_order; ++e) s.insert(e);
  return s;
}

std::vector<Magma> enumerate_tables(const EnumerationConstraints& cons,
                                    int workers) {
  const auto shards = shard_constraints(cons, 4 * resolve_workers(workers));
  if (shards.empty()) return {};
  const auto parts = run_shards<std::vector<Magma>>(
      static_cast<int>(shards.size()), workers, [&](int s) {
        std::vector<Magma> out;
        for_each_magma(shards[s], [&](const Magma& m) {
          out.push_back(m);
          return true;
        });
        return out;
      });
  std::vector<Magma> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::uint64_t count_tables(const EnumerationConstraints& cons, int workers) {
  const auto shards = shard_constraints(cons, 4 * resolve_workers(workers));
  if (shards.empty()) return 0;
  const auto parts = run_shards<std::uint64_t>(
      static_cast<int>(shards.size()), workers,
      [&](int s) { return count_magmas(shards[s]); });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// k-point generalised-inflation extension tables of a base, generated by the
// product law from (class, alpha, beta) assignments and filtered by an
// identity (right modular, or associative for the semigroup hunt).

struct KPointResult {
  std::vector<Magma> tables;            // distinct, in first-occurrence order
  std::uint64_t logical_assignments = 0;  // |U|^(k(2|U|+1)) class/map space
  std::uint64_t built = 0;                // tables actually assembled
};

struct MapPair {
  std::vector<Element> alpha, beta, row, col;
};

bool odometer_advance(std::vector<Element>& v, int n) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (++v[i] < n) return true;
    v[i] = 0;
  }
  return false;
}

// Necessary single-x conditions on the maps: identity instances of the
// extension that mention the new element once plus base elements only.
bool map_pair_survives(const Magma& base, const std::vector<Element>& row,
                       const std::vector<Element>& col, bool assoc_mode) {
  const int n = base.order();
  if (!assoc_mode) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (base.op(row[a], b) != col[base.op(b, a)]) return false;   // (xa)b=(ba)x
        if (base.op(col[a], b) != base.op(col[b], a)) return false;   // (ax)b=(bx)a
      }
    return true;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = base.op(a, b);
      if (base.op(row[a], b) != row[ab]) return false;                // (xa)b=x(ab)
      if (base.op(col[a], b) != base.op(a, row[b])) return false;     // (ax)b=a(xb)
      if (col[ab] != base.op(a, col[b])) return false;                // (ab)x=a(bx)
    }
  return true;
}

std::vector<MapPair> surviving_map_pairs(const Magma& base, bool assoc_mode) {
  const int n = base.order();
  std::vector<MapPair> out;
  std::vector<Element> alpha(n, 0);
  do {
    std::vector<Element> row(n);
    for (Element u = 0; u < n; ++u) row[u] = base.op(alpha[u], u);
    std::vector<Element> beta(n, 0);
    do {
      std::vector<Element> col(n);
      for (Element u = 0; u < n; ++u) col[u] = base.op(u, beta[u]);
      if (map_pair_survives(base, row, col, assoc_mode))
        out.push_back({alpha, beta, row, col});
    } while (odometer_advance(beta, n));
  } while (odometer_advance(alpha, n));
  return out;
}

constexpr int kKeyBits = 3;  // new-cell values stay inside the base carrier

std::uint64_t pack_new_cells(const Element* table, int n, int k) {
  const int order = n + k;
  std::uint64_t key = 0;
  int shift = 0;
  auto put = [&](Element v) {
    key |= static_cast<std::uint64_t>(v) << shift;
    shift += kKeyBits;
  };
  for (int i = 0; i < k; ++i)
    for (Element u = 0; u < n; ++u) put(table[(n + i) * order + u]);
  for (int i = 0; i < k; ++i)
    for (Element u = 0; u < n; ++u) put(table[u * order + (n + i)]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) put(table[(n + i) * order + (n + j)]);
  return key;
}

Magma table_from_key(const Magma& base, int k, std::uint64_t key) {
  const int n = base.order();
  const int order = n + k;
  std::vector<Element> table(static_cast<std::size_t>(order) * order, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * order + b] = base.op(a, b);
  int shift = 0;
  auto get = [&]() {
    const Element v =
        static_cast<Element>(key >> shift & ((1u << kKeyBits) - 1));
    shift += kKeyBits;
    return v;
  };
  for (int i = 0; i < k; ++i)
    for (Element u = 0; u < n; ++u) table[(n + i) * order + u] = get();
  for (int i = 0; i < k; ++i)
    for (Element u = 0; u < n; ++u) table[u * order + (n + i)] = get();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[(n + i) * order + (n + j)] = get();
  return Magma(order, std::move(table));
}

struct KeyRank {
  std::uint64_t key;
  std::uint64_t rank;
};

void compact_keys(std::vector<KeyRank>& v) {
  std::sort(v.begin(), v.end(), [](const KeyRank& a, const KeyRank& b) {
    return a.key != b.key ? a.key < b.key : a.rank < b.rank;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const KeyRank& a, const KeyRank& b) {
                        return a.key == b.key;
                      }),
          v.end());
}

KPointResult k_point_extensions(const Magma& base, int k, bool assoc_mode) {
  const int n = base.order();
  if (n > 4 || k < 1 || k > 2)
    throw CapacityError("k-point extension generation supports base order <= 4 "
                        "with 1 or 2 adjoined elements");
  KPointResult res;
  {
    std::uint64_t space = 1;
    for (int i = 0; i < k * (2 * n + 1); ++i) space *= n;
    res.logical_assignments = space;
  }

  const auto pairs = surviving_map_pairs(base, assoc_mode);
  const int order = n + k;
  std::vector<Element> table(static_cast<std::size_t>(order) * order, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * order + b] = base.op(a, b);

  std::vector<KeyRank> found;
  std::uint64_t rank = 0;
  auto note_candidate = [&]() {
    ++res.built;
    const bool pass =
        assoc_mode
            ? !raw::associativity_violation(table.data(), order).has_value()
            : !raw::right_modular_violation(table.data(), order).has_value();
    if (pass) {
      found.push_back({pack_new_cells(table.data(), n, k), rank});
      if (found.size() >= (std::size_t{1} << 21)) compact_keys(found);
    }
    ++rank;
  };

  if (k == 1) {
    for (const auto& p : pairs) {
      for (Element u = 0; u < n; ++u) {
        table[n * order + u] = p.row[u];
        table[u * order + n] = p.col[u];
      }
      for (Element c = 0; c < n; ++c) {
        table[n * order + n] = base.op(p.alpha[c], p.beta[c]);
        note_candidate();
      }
    }
  } else {
    const Element x1 = n, x2 = n + 1;
    for (const auto& p1 : pairs) {
      for (Element u = 0; u < n; ++u) {
        table[x1 * order + u] = p1.row[u];
        table[u * order + x1] = p1.col[u];
      }
      for (const auto& p2 : pairs) {
        for (Element u = 0; u < n; ++u) {
          table[x2 * order + u] = p2.row[u];
          table[u * order + x2] = p2.col[u];
        }
        for (Element c1 = 0; c1 < n; ++c1)
          for (Element c2 = 0; c2 < n; ++c2) {
            table[x1 * order + x1] = base.op(p1.alpha[c1], p1.beta[c1]);
            table[x1 * order + x2] = base.op(p1.alpha[c2], p2.beta[c1]);
            table[x2 * order + x1] = base.op(p2.alpha[c1], p1.beta[c2]);
            table[x2 * order + x2] = base.op(p2.alpha[c2], p2.beta[c2]);
            note_candidate();
          }
      }
    }
  }

  compact_keys(found);
  std::sort(found.begin(), found.end(),
            [](const KeyRank& a, const KeyRank& b) { return a.rank < b.rank; });
  res.tables.reserve(found.size());
  for (const auto& kr : found) res.tables.push_back(table_from_key(base, k, kr.key));
  return res;
}

// ---------------------------------------------------------------------------
// Base-hypothesis sweeps: every right modular generalised-inflation
// extension of a filtered base must retract onto it

struct SweepConfig {
  std::string name;
  std::function<bool(const Magma&)> base_filter;
  bool idempotent_subsuite = false;
  bool left_identity_construction = false;
};

HarnessReport run_sweep(const SweepConfig& cfg, const SweepBounds& bounds,
                        int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = cfg.name;
  std::uint64_t corollary_instances = 0;
  std::uint64_t construction_checks = 0;

  for (int points = 1; points <= 2; ++points) {
    const int max_order = points == 1 ? bounds.one_point_max_order
                                      : bounds.two_point_max_order;
    const char* tag = points == 1 ? "one-point" : "two-point";
    for (int n = 1; n <= max_order; ++n) {
      EnumerationConstraints cons;
      cons.order = n;
      cons.require.right_modular = true;
      const auto all_bases = enumerate_tables(cons, workers);
      std::vector<Magma> bases;
      std::uint64_t skipped = 0;
      for (const auto& b : all_bases)
        if (cfg.base_filter(b))
          bases.push_back(b);
        else
          ++skipped;
      const std::string prefix =
          cfg.name + "." + tag + ".order" + std::to_string(n);
      r.add_count(prefix + ".bases", bases.size());
      r.add_count(prefix + ".skipped", skipped);

      struct BaseResult {
        std::uint64_t instances = 0;
        std::uint64_t corollary = 0;
        std::uint64_t li_checks = 0;
        std::vector<Violation> violations;
      };
      const auto results = run_shards<BaseResult>(
          static_cast<int>(bases.size()), workers, [&](int bi) {
            const Magma& base = bases[bi];
            BaseResult br;
            std::vector<Magma> exts;
            if (points == 1) {
              for (auto& [spec, ext] : enumerate_rm_extensions(base, false))
                exts.push_back(std::move(ext));
            } else {
              exts = k_point_extensions(base, 2, false).tables;
            }
            const bool idem =
                cfg.idempotent_subsuite && is_idempotent(base).holds;
            std::vector<Element> lids;
            if (cfg.left_identity_construction)
              lids = left_identities(base).members();
            for (const Magma& ext : exts) {
              const ElementSet u_set = base_carrier_in(ext, base.order());
              ++br.instances;
              if (idem) ++br.corollary;
              if (!find_retraction(ext, u_set))
                br.violations.push_back(
                    {ext, base_label(base), "no retraction onto the base"});
              for (Element e : lids) {
                RetractionWitness w;
                w.phi.resize(ext.order());
                for (Element x = 0; x < ext.order(); ++x)
                  w.phi[x] = x < base.order() ? x : ext.op(e, x);
                ++br.li_checks;
                if (!verify_retraction(ext, u_set, w).holds)
                  br.violations.push_back(
                      {ext, base_label(base),
                       "phi(x) = e*x is not a retraction for left identity " +
                           std::to_string(e)});
              }
            }
            return br;
          });
      std::uint64_t instances = 0;
      for (const auto& br : results) {
        instances += br.instances;
        corollary_instances += br.corollary;
        construction_checks += br.li_checks;
        for (const auto& v : br.violations) r.violations.push_back(v);
      }
      r.add_count(prefix + ".instances", instances);
      r.instances_checked += instances;
    }
  }
  if (cfg.idempotent_subsuite)
    r.add_count(cfg.name + ".idempotent-corollary.instances",
                corollary_instances);
  if (cfg.left_identity_construction)
    r.add_count(cfg.name + ".construction-checks", construction_checks);
  r.add_count(cfg.name + ".violations", r.violations.size());
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

}  // namespace

bool HarnessReport::has_count(std::string_view key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return true;
  return false;
}

std::uint64_t HarnessReport::count(std::string_view key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  throw ArgumentError("report '" + name + "' has no count '" +
                      std::string(key) + "'");
}

void HarnessReport::add_count(std::string key, std::uint64_t value) {
  counts.emplace_back(std::move(key), value);
}

HarnessReport census_w_extensions(int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = "census-w-extensions";
  const Magma& w = fixture("W");

  EnumerationConstraints cons;
  cons.order = 5;
  cons.fixed_cells.assign(25, std::nullopt);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) cons.fixed_cells[a * 5 + b] = w.op(a, b);
  cons.free_cell_domain = ElementSet(5, {0, 1, 2, 3});

  struct ShardResult {
    std::uint64_t candidates = 0, gen_inflations = 0, right_modular = 0,
                  both = 0;
    std::vector<Magma> winners;
  };
  const auto shards = shard_constraints(cons, 8 * resolve_workers(workers));
  const auto parts = run_shards<ShardResult>(
      static_cast<int>(shards.size()), workers, [&](int s) {
        ShardResult sr;
        const ElementSet u_set(5, {0, 1, 2, 3});
        for_each_magma(shards[s], [&](const Magma& m) {
          ++sr.candidates;
          const bool rm =
              !raw::right_modular_violation(m.table().data(), 5).has_value();
          const bool gi = find_gen_inflation(m, u_set).has_value();
          if (gi) ++sr.gen_inflations;
          if (rm) ++sr.right_modular;
          if (rm && gi) {
            ++sr.both;
            sr.winners.push_back(m);
          }
          return true;
        });
        return sr;
      });
  ShardResult total;
  for (const auto& p : parts) {
    total.candidates += p.candidates;
    total.gen_inflations += p.gen_inflations;
    total.right_modular += p.right_modular;
    total.both += p.both;
    total.winners.insert(total.winners.end(), p.winners.begin(),
                         p.winners.end());
  }

  r.add_count("example1.candidates", total.candidates);
  r.add_count("example1.gen-inflations", total.gen_inflations);
  r.add_count("example1.right-modular", total.right_modular);
  r.add_count("example1.rm-gen-inflations", total.both);
  r.instances_checked = total.candidates;

  if (total.candidates != 262144)
    r.violations.push_back(
        {w, "W extension space", "expected 262144 candidate tables, got " +
                                     std::to_string(total.candidates)});
  if (total.both != 4)
    r.violations.push_back(
        {w, "W extension space",
         "expected 4 right modular generalised inflations, got " +
             std::to_string(total.both)});
  if (total.gen_inflations < 65536 || total.gen_inflations > 262144)
    r.violations.push_back(
        {w, "W extension space",
         "generalised-inflation census " + std::to_string(total.gen_inflations) +
             " outside [65536, 262144]"});

  std::uint64_t retraction_ok = 0;
  std::vector<std::vector<Element>> canonical_tables;
  for (const Magma& ext : total.winners) {
    const ElementSet u_set = base_carrier_in(ext, 4);
    if (find_retraction(ext, u_set))
      ++retraction_ok;
    else
      r.violations.push_back(
          {ext, "W", "right modular generalised inflation with no retraction"});
    canonical_tables.push_back(canonical_form(ext).table());
  }
  std::sort(canonical_tables.begin(), canonical_tables.end());
  canonical_tables.erase(
      std::unique(canonical_tables.begin(), canonical_tables.end()),
      canonical_tables.end());
  r.add_count("example1.retraction-ok", retraction_ok);
  r.add_count("example1.iso-classes", canonical_tables.size());
  if (canonical_tables.size() != 1)
    r.violations.push_back({w, "W extension space",
                            "expected one isomorphism class among survivors"});

  // the unrestricted count: products may also hit the new element
  EnumerationConstraints free_cons = cons;
  free_cons.free_cell_domain.reset();
  r.add_count("example1.free-tables", count_tables(free_cons, workers));

  r.elapsed_seconds = seconds_since(t0);
  return r;
}

HarnessReport verify_w_uniqueness(int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = "w-uniqueness";
  const Magma& w = fixture("W");

  std::vector<Magma> order4;
  for (int n = 2; n <= 4; ++n) {
    EnumerationConstraints cons;
    cons.order = n;
    cons.require.idempotent = true;
    cons.require.right_modular = true;
    cons.require.not_associative = true;
    auto found = enumerate_tables(cons, workers);
    r.add_count("uniqueness.nonassoc-idem-rm.order" + std::to_string(n),
                found.size());
    r.instances_checked += found.size();
    if (n < 4 && !found.empty())
      r.violations.push_back({found.front(), "order " + std::to_string(n),
                              "unexpected non-associative idempotent right "
                              "modular table below order 4"});
    if (n == 4) order4 = std::move(found);
  }

  std::vector<std::vector<Element>> classes;
  for (const Magma& m : order4) classes.push_back(canonical_form(m).table());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  r.add_count("uniqueness.order4-classes", classes.size());

  const Magma w_canon = canonical_form(w);
  const bool is_w = classes.size() == 1 && classes.front() == w_canon.table();
  r.add_count("uniqueness.order4-is-w", is_w ? 1 : 0);
  if (!is_w)
    r.violations.push_back(
        {w, "order 4",
         "the non-associative idempotent right modular class is not W"});

  bool quasigroup = true, cancellative = true;
  for (const Magma& m : order4) {
    if (!is_quasigroup(m).holds) quasigroup = false;
    if (!is_cancellative(m).holds) cancellative = false;
  }
  r.add_count("uniqueness.order4-quasigroup", quasigroup ? 1 : 0);
  r.add_count("uniqueness.order4-cancellative", cancellative ? 1 : 0);
  if (!quasigroup || !cancellative)
    r.violations.push_back({w, "order 4", "expected a cancellative quasigroup"});

  // orbit oracle: the labeled count must equal the number of distinct
  // relabelings of W
  std::vector<std::vector<Element>> orbit;
  std::vector<Element> perm{0, 1, 2, 3};
  do {
    orbit.push_back(apply_permutation(w, Permutation{perm}).table());
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  r.add_count("uniqueness.w-orbit-size", orbit.size());
  if (orbit.size() != order4.size())
    r.violations.push_back(
        {w, "order 4",
         "labeled count " + std::to_string(order4.size()) +
             " differs from W orbit size " + std::to_string(orbit.size())});

  r.elapsed_seconds = seconds_since(t0);
  return r;
}

HarnessReport verify_right_cancellative_bases(const SweepBounds& bounds,
                                              int workers) {
  SweepConfig cfg;
  cfg.name = "sweep-right-cancellative";
  cfg.base_filter = [](const Magma& m) {
    return is_right_cancellative(m).holds;
  };
  return run_sweep(cfg, bounds, workers);
}

HarnessReport verify_union_of_groups_bases(const SweepBounds& bounds,
                                           int workers) {
  SweepConfig cfg;
  cfg.name = "sweep-union-of-groups";
  cfg.base_filter = [](const Magma& m) { return is_union_of_groups(m).holds; };
  cfg.idempotent_subsuite = true;
  return run_sweep(cfg, bounds, workers);
}

HarnessReport verify_left_identity_bases(const SweepBounds& bounds,
                                         int workers) {
  SweepConfig cfg;
  cfg.name = "sweep-left-identity";
  cfg.base_filter = [](const Magma& m) { return !left_identities(m).empty(); };
  cfg.left_identity_construction = true;
  return run_sweep(cfg, bounds, workers);
}

HarnessReport verify_medial_and_cancellation(int max_order, int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = "medial-cancellation";
  for (int n = 1; n <= max_order; ++n) {
    EnumerationConstraints cons;
    cons.order = n;
    cons.require.right_modular = true;
    const auto shards = shard_constraints(cons, 4 * resolve_workers(workers));
    struct ShardResult {
      std::uint64_t tables = 0;
      std::vector<Violation> violations;
    };
    const auto parts = run_shards<ShardResult>(
        static_cast<int>(shards.size()), workers, [&](int s) {
          ShardResult sr;
          for_each_magma(shards[s], [&](const Magma& m) {
            ++sr.tables;
            if (!is_medial(m).holds)
              sr.violations.push_back(
                  {m, "order " + std::to_string(m.order()),
                   "right modular table that is not medial"});
            if (is_right_cancellative(m).holds &&
                !is_left_cancellative(m).holds)
              sr.violations.push_back(
                  {m, "order " + std::to_string(m.order()),
                   "right cancellative right modular table that is not "
                   "cancellative"});
            return true;
          });
          return sr;
        });
    std::uint64_t tables = 0;
    for (const auto& p : parts) {
      tables += p.tables;
      for (const auto& v : p.violations) r.violations.push_back(v);
    }
    r.add_count("rm-tables.order" + std::to_string(n), tables);
    r.instances_checked += tables;
  }
  r.add_count("medial-cancellation.violations", r.violations.size());
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

HarnessReport verify_extension_equivalence(std::uint64_t w_budget, int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = "extension-equivalence";
  std::uint64_t exhaustive_specs = 0;
  for (int n = 1; n <= 3; ++n) {
    EnumerationConstraints cons;
    cons.order = n;
    cons.require.right_modular = true;
    const auto bases = enumerate_tables(cons, workers);
    r.add_count("extension-equivalence.bases.order" + std::to_string(n),
                bases.size());
    std::uint64_t specs_per_base = 1;
    for (int i = 0; i < 2 * n + 1; ++i) specs_per_base *= n;
    exhaustive_specs += specs_per_base * bases.size();
    const auto parts = run_shards<std::optional<Violation>>(
        static_cast<int>(bases.size()), workers,
        [&](int bi) -> std::optional<Violation> {
          const auto report =
              cross_validate_extension_conditions(bases[bi], 0, 1);
          if (report.holds) return std::nullopt;
          return Violation{bases[bi], base_label(bases[bi]),
                           "conditions and built extension disagree"};
        });
    for (const auto& v : parts)
      if (v) r.violations.push_back(*v);
  }
  r.add_count("extension-equivalence.exhaustive-specs", exhaustive_specs);
  r.instances_checked += exhaustive_specs;

  const auto w_report =
      cross_validate_extension_conditions(fixture("W"), w_budget, workers);
  if (!w_report.holds)
    r.violations.push_back({fixture("W"), "W",
                            "conditions and built extension disagree on a "
                            "sampled spec"});
  r.add_count("extension-equivalence.sampled-specs", w_budget);
  r.instances_checked += w_budget;
  r.add_count("extension-equivalence.violations", r.violations.size());
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

HarnessReport verify_example2() {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = "example2";
  const Magma& printed = fixture("EX2_PRINTED");
  const Magma& derived = fixture("EX2_DERIVED");
  const Magma& c1 = fixture("C1");
  const ElementSet u_set(4, {0, 1, 2});
  // carrier order: a=0, b=1, 1=2, x=3

  auto claim = [&](const std::string& id, bool pass, const std::string& why) {
    r.add_count(id, pass ? 1 : 0);
    if (!pass) r.violations.push_back({printed, "EX2", why});
  };

  claim("ex2.printed-not-associative", !is_associative(printed).holds,
        "printed table should not be associative");
  // the noted instance: x^2 * a = a while x * (x * a) = b
  const Element x = 3, a = 0, b = 1;
  claim("ex2.noted-instance",
        printed.op(printed.op(x, x), a) == a &&
            printed.op(x, printed.op(x, a)) == b,
        "x^2*a = a != b = x*(xa) instance does not evaluate as documented");
  claim("ex2.printed-not-right-modular", !is_right_modular(printed).holds,
        "printed table should not be right modular");
  claim("ex2.printed-not-inflation", !find_retraction(printed, u_set),
        "printed table should admit no retraction onto C1");
  claim("ex2.printed-gen-inflation",
        find_gen_inflation(printed, u_set).has_value(),
        "printed table should be a generalised inflation of C1");

  const auto& maps = ex2_defining_maps();
  GenInflationWitness stated;
  stated.cls = {0, 1, 2, maps.cls};
  stated.alpha = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, maps.alpha};
  stated.beta = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, maps.beta};
  claim("ex2.maps-verify-derived",
        verify_gen_inflation(derived, u_set, stated).holds,
        "defining maps should verify against the derived table");
  const auto printed_check = verify_gen_inflation(printed, u_set, stated);
  claim("ex2.maps-fail-printed-at-ax",
        !printed_check.holds && printed_check.witness &&
            *printed_check.witness == std::vector<Element>{0, 3},
        "defining maps should fail against the printed table exactly at (a, x)");

  int differing = 0;
  Element diff_a = -1, diff_b = -1;
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j)
      if (printed.op(i, j) != derived.op(i, j)) {
        ++differing;
        diff_a = i;
        diff_b = j;
      }
  claim("ex2.tables-differ-only-at-ax",
        differing == 1 && diff_a == 0 && diff_b == 3,
        "printed and derived tables should differ exactly at cell (a, x)");

  ExtensionSpec spec{c1, maps.cls, maps.alpha, maps.beta};
  claim("ex2.derived-from-maps", build_extension(spec) == derived,
        "derived table should equal the extension built from the maps");

  r.instances_checked = r.counts.size();
  r.add_count("example2.violations", r.violations.size());
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

HarnessReport hunt_strict_gen_inflations(HuntMode mode, const HuntBounds& bounds,
                                         int workers) {
  const auto t0 = Clock::now();
  HarnessReport r;
  r.name = mode == HuntMode::right_modular ? "hunt-right-modular"
                                           : "hunt-commutative-semigroup";
  const bool assoc_mode = mode == HuntMode::commutative_semigroup;

  std::uint64_t assignments = 0, built = 0, instances = 0;
  for (int n = 1; n <= bounds.max_sub_order; ++n) {
    EnumerationConstraints cons;
    cons.order = n;
    if (assoc_mode) {
      cons.require.commutative = true;
      cons.require.associative = true;
    } else {
      cons.require.right_modular = true;
    }
    const auto bases = enumerate_tables(cons, workers);
    r.add_count(r.name + ".bases.order" + std::to_string(n), bases.size());

    for (int k = 1; k <= bounds.max_adjoined; ++k) {
      if (k > Config::get().max_adjoined(n))
        throw CapacityError("hunt bounds exceed the generalised-inflation "
                            "search limits");
      struct BaseResult {
        std::uint64_t assignments = 0, built = 0, instances = 0;
        std::vector<Violation> counterexamples;
      };
      const auto parts = run_shards<BaseResult>(
          static_cast<int>(bases.size()), workers, [&](int bi) {
            const Magma& base = bases[bi];
            BaseResult br;
            auto res = k_point_extensions(base, k, assoc_mode);
            br.assignments = res.logical_assignments;
            br.built = res.built;
            for (const Magma& ext : res.tables) {
              ++br.instances;
              const ElementSet u_set = base_carrier_in(ext, base.order());
              if (!find_retraction(ext, u_set))
                br.counterexamples.push_back(
                    {ext, base_label(base),
                     "generalised inflation admitting no retraction"});
            }
            return br;
          });
      for (const auto& br : parts) {
        assignments += br.assignments;
        built += br.built;
        instances += br.instances;
        for (const auto& v : br.counterexamples) r.violations.push_back(v);
      }
    }
  }
  r.instances_checked = instances;
  r.add_count(r.name + ".instances", instances);
  r.add_count(r.name + ".assignments", assignments);
  r.add_count(r.name + ".built", built);
  r.add_count(r.name + ".counterexamples", r.violations.size());
  r.notes.push_back("exhaustive certificate: base order <= " +
                    std::to_string(bounds.max_sub_order) + ", adjoined <= " +
                    std::to_string(bounds.max_adjoined) + ", " +
                    std::to_string(assignments) + " class/map assignments, " +
                    std::to_string(built) + " candidate tables");
  r.notes.push_back(r.violations.empty()
                        ? "no counterexample within bounds"
                        : "counterexamples within bounds: " +
                              std::to_string(r.violations.size()));
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

std::string format_report(const HarnessReport& report) {
  std::ostringstream out;
  out << "== " << report.name << " ==\n";
  out << "instances checked: " << report.instances_checked << '\n';
  for (const auto& [key, value] : report.counts)
    out << key << " = " << value << '\n';
  for (const auto& note : report.notes) out << note << '\n';
  if (report.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations)
      out << "  [" << v.substructure << "] " << v.detail << " | "
          << flat_table(v.instance) << '\n';
  }
  return out.str();
}

PaperVerification verify_paper(const std::map<std::string, std::uint64_t>& pinned,
                               std::uint64_t w_budget, int workers) {
  PaperVerification pv;
  pv.reports.push_back(census_w_extensions(workers));
  pv.reports.push_back(verify_w_uniqueness(workers));
  pv.reports.push_back(verify_example2());
  pv.reports.push_back(verify_right_cancellative_bases({}, workers));
  pv.reports.push_back(verify_union_of_groups_bases({}, workers));
  pv.reports.push_back(verify_left_identity_bases({}, workers));
  pv.reports.push_back(verify_medial_and_cancellation(4, workers));
  pv.reports.push_back(verify_extension_equivalence(w_budget, workers));

  std::map<std::string, std::uint64_t> measured;
  for (const auto& rep : pv.reports)
    for (const auto& [k, v] : rep.counts) measured.emplace(k, v);

  auto claim_eq = [&](const std::string& id, std::uint64_t expected) {
    Claim c;
    c.id = id;
    c.expected = "= " + std::to_string(expected);
    auto it = measured.find(id);
    c.measured = it == measured.end() ? "absent" : std::to_string(it->second);
    c.pass = it != measured.end() && it->second == expected;
    pv.claims.push_back(std::move(c));
  };
  auto claim_range = [&](const std::string& id, std::uint64_t lo,
                         std::uint64_t hi) {
    Claim c;
    c.id = id;
    c.expected = "in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    auto it = measured.find(id);
    c.measured = it == measured.end() ? "absent" : std::to_string(it->second);
    c.pass = it != measured.end() && it->second >= lo && it->second <= hi;
    pv.claims.push_back(std::move(c));
  };

  // counting and uniqueness claims
  claim_eq("example1.candidates", 262144);
  claim_eq("example1.free-tables", 1953125);
  claim_eq("example1.rm-gen-inflations", 4);
  claim_eq("example1.retraction-ok", 4);
  claim_eq("example1.iso-classes", 1);
  claim_range("example1.gen-inflations", 65536, 262144);
  claim_eq("uniqueness.nonassoc-idem-rm.order2", 0);
  claim_eq("uniqueness.nonassoc-idem-rm.order3", 0);
  claim_eq("uniqueness.order4-classes", 1);
  claim_eq("uniqueness.order4-is-w", 1);
  claim_eq("uniqueness.order4-quasigroup", 1);
  claim_eq("uniqueness.order4-cancellative", 1);

  // the bundled example suite
  for (const char* id :
       {"ex2.printed-not-associative", "ex2.noted-instance",
        "ex2.printed-not-right-modular", "ex2.printed-not-inflation",
        "ex2.printed-gen-inflation", "ex2.maps-verify-derived",
        "ex2.maps-fail-printed-at-ax", "ex2.tables-differ-only-at-ax",
        "ex2.derived-from-maps"})
    claim_eq(id, 1);

  // sweeps and cross-validation report no violations
  for (const auto& rep : pv.reports) {
    Claim c;
    c.id = rep.name + ".ok";
    c.expected = "no violations";
    c.measured = std::to_string(rep.violations.size()) + " violations";
    c.pass = rep.violations.empty();
    pv.claims.push_back(std::move(c));
  }

  // pinned regression values
  for (const auto& [key, expected] : pinned) {
    Claim c;
    c.id = key;
    c.expected = "= " + std::to_string(expected) + " (pinned)";
    auto it = measured.find(key);
    c.measured = it == measured.end() ? "absent" : std::to_string(it->second);
    c.pass = it != measured.end() && it->second == expected;
    pv.claims.push_back(std::move(c));
  }

  pv.all_pass = true;
  for (const auto& c : pv.claims)
    if (!c.pass) pv.all_pass = false;
  return pv;
}

const std::map<std::string, std::uint64_t>& pinned_counts() {
  // regenerate with: rmg verify-paper --print-counts
  static const std::map<std::string, std::uint64_t> counts = {
      {"example1.gen-inflations", 179200},
      {"example1.right-modular", 4},
      {"uniqueness.nonassoc-idem-rm.order4", 2},
      {"uniqueness.order4-classes", 1},
      {"uniqueness.w-orbit-size", 2},
      {"rm-tables.order1", 1},
      {"rm-tables.order2", 6},
      {"rm-tables.order3", 105},
      {"rm-tables.order4", 7336},
      {"extension-equivalence.exhaustive-specs", 229828},
      {"sweep-right-cancellative.one-point.order1.bases", 1},
      {"sweep-right-cancellative.one-point.order1.instances", 1},
      {"sweep-right-cancellative.one-point.order2.bases", 2},
      {"sweep-right-cancellative.one-point.order2.instances", 4},
      {"sweep-right-cancellative.one-point.order3.bases", 6},
      {"sweep-right-cancellative.one-point.order3.instances", 18},
      {"sweep-right-cancellative.one-point.order4.bases", 48},
      {"sweep-right-cancellative.one-point.order4.instances", 192},
      {"sweep-right-cancellative.two-point.order1.instances", 1},
      {"sweep-right-cancellative.two-point.order2.instances", 8},
      {"sweep-right-cancellative.two-point.order3.instances", 54},
      {"sweep-union-of-groups.one-point.order1.bases", 1},
      {"sweep-union-of-groups.one-point.order1.instances", 1},
      {"sweep-union-of-groups.one-point.order2.bases", 4},
      {"sweep-union-of-groups.one-point.order2.instances", 8},
      {"sweep-union-of-groups.one-point.order3.bases", 24},
      {"sweep-union-of-groups.one-point.order3.instances", 72},
      {"sweep-union-of-groups.one-point.order4.bases", 274},
      {"sweep-union-of-groups.one-point.order4.instances", 1096},
      {"sweep-union-of-groups.two-point.order1.instances", 1},
      {"sweep-union-of-groups.two-point.order2.instances", 16},
      {"sweep-union-of-groups.two-point.order3.instances", 216},
      {"sweep-union-of-groups.idempotent-corollary.instances", 434},
      {"sweep-left-identity.one-point.order1.bases", 1},
      {"sweep-left-identity.one-point.order1.instances", 1},
      {"sweep-left-identity.one-point.order2.bases", 4},
      {"sweep-left-identity.one-point.order2.instances", 8},
      {"sweep-left-identity.one-point.order3.bases", 30},
      {"sweep-left-identity.one-point.order3.instances", 90},
      {"sweep-left-identity.one-point.order4.bases", 448},
      {"sweep-left-identity.one-point.order4.instances", 1792},
      {"sweep-left-identity.two-point.order1.instances", 1},
      {"sweep-left-identity.two-point.order2.instances", 16},
      {"sweep-left-identity.two-point.order3.instances", 270},
      {"sweep-left-identity.construction-checks", 2178},
  };
  return counts;
}

std::map<std::string, std::uint64_t> parse_pinned_counts(std::string_view text) {
  std::map<std::string, std::uint64_t> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string key, eq, value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw ParseError(number, "expected 'key = integer'");
    out[key] = std::strtoull(value.c_str(), nullptr, 10);
  }
  return out;
}

}  // namespace rmg

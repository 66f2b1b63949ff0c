#include "rmg/extension.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "rmg/config.hpp"
#include "rmg/identities.hpp"
#include "rmg/inflation.hpp"
#include "rmg/morphisms.hpp"
#include "rmg/parallel.hpp"
#include "raw_checks.hpp"

namespace rmg {

namespace {

void check_spec(const ExtensionSpec& spec) {
  const int n = spec.base.order();
  if (spec.c < 0 || spec.c >= n)
    throw ArgumentError("class element outside base carrier");
  if (static_cast<int>(spec.alpha.size()) != n ||
      static_cast<int>(spec.beta.size()) != n)
    throw ArgumentError("alpha and beta must be total on the base carrier");
  for (Element v : spec.alpha)
    if (v < 0 || v >= n) throw ArgumentError("alpha image outside base carrier");
  for (Element v : spec.beta)
    if (v < 0 || v >= n) throw ArgumentError("beta image outside base carrier");
}

// Raw-pointer variant shared with the enumerator loops.
struct RawConditions {
  const Element* t;
  int n;

  // ((a alpha)a)b = (ba)(beta(ba))
  bool eq1(const Element* alpha, const Element* beta, Element a, Element b) const {
    const Element left = t[t[alpha[a] * n + a] * n + b];
    const Element ba = t[b * n + a];
    return left == t[ba * n + beta[ba]];
  }
  // (a(beta a))b = (b(beta b))a
  bool eq2(const Element* beta, Element a, Element b) const {
    return t[t[a * n + beta[a]] * n + b] == t[t[b * n + beta[b]] * n + a];
  }
  // ((c alpha)(beta c))a = (a(beta a))(beta(a(beta a)))
  bool eq3(const Element* alpha, const Element* beta, Element c, Element a) const {
    const Element xx = t[alpha[c] * n + beta[c]];
    const Element ax = t[a * n + beta[a]];
    return t[xx * n + a] == t[ax * n + beta[ax]];
  }

  bool all(const Element* alpha, const Element* beta, Element c) const {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (!eq1(alpha, beta, a, b)) return false;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (!eq2(beta, a, b)) return false;
    for (Element a = 0; a < n; ++a)
      if (!eq3(alpha, beta, c, a)) return false;
    return true;
  }
};

}  // namespace

PropertyReport extension_conditions(const ExtensionSpec& spec) {
  check_spec(spec);
  const int n = spec.base.order();
  RawConditions rc{spec.base.table().data(), n};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (!rc.eq1(spec.alpha.data(), spec.beta.data(), a, b))
        return {false, std::vector<Element>{a, b}, "eq1"};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (!rc.eq2(spec.beta.data(), a, b))
        return {false, std::vector<Element>{a, b}, "eq2"};
  for (Element a = 0; a < n; ++a)
    if (!rc.eq3(spec.alpha.data(), spec.beta.data(), spec.c, a))
      return {false, std::vector<Element>{a}, "eq3"};
  return {true, std::nullopt, ""};
}

Magma build_extension(const ExtensionSpec& spec) {
  check_spec(spec);
  return build_gen_inflation(spec.base, {spec.c}, {spec.alpha}, {spec.beta});
}

std::vector<std::pair<ExtensionSpec, Magma>> enumerate_rm_extensions(
    const Magma& base, bool dedupe) {
  const int n = base.order();
  if (n > Config::get().extension_enum_max_order)
    throw CapacityError("extension enumeration bounded to base order " +
                        std::to_string(Config::get().extension_enum_max_order));
  if (auto rm = is_right_modular(base); !rm.holds)
    throw PreconditionError("base is not right modular");

  RawConditions rc{base.table().data(), n};
  std::vector<std::pair<ExtensionSpec, Magma>> out;
  std::unordered_set<std::string> seen_tables;
  std::unordered_set<std::string> seen_classes;

  std::vector<Element> alpha(n, 0), beta(n, 0);
  auto advance = [n](std::vector<Element>& v) {
    for (int i = n - 1; i >= 0; --i) {
      if (++v[i] < n) return true;
      v[i] = 0;
    }
    return false;
  };

  for (Element c = 0; c < n; ++c) {
    std::fill(alpha.begin(), alpha.end(), 0);
    do {
      std::fill(beta.begin(), beta.end(), 0);
      do {
        if (!rc.all(alpha.data(), beta.data(), c)) continue;
        ExtensionSpec spec{base, c, alpha, beta};
        Magma ext = build_extension(spec);
        std::string key(ext.table().size(), '\0');
        for (std::size_t i = 0; i < ext.table().size(); ++i)
          key[i] = static_cast<char>(ext.table()[i]);
        if (!seen_tables.insert(key).second) continue;
        if (dedupe) {
          const Magma canon = canonical_form(ext);
          std::string ckey(canon.table().size(), '\0');
          for (std::size_t i = 0; i < canon.table().size(); ++i)
            ckey[i] = static_cast<char>(canon.table()[i]);
          if (!seen_classes.insert(ckey).second) continue;
        }
        out.emplace_back(std::move(spec), std::move(ext));
      } while (advance(beta));
    } while (advance(alpha));
  }
  return out;
}

PropertyReport cross_validate_extension_conditions(const Magma& base,
                                                   std::uint64_t budget,
                                                   int workers) {
  const int n = base.order();
  if (auto rm = is_right_modular(base); !rm.holds)
    throw PreconditionError("base is not right modular");
  if (n > 4)
    throw CapacityError("cross-validation bounded to base order 4");

  const Element* t = base.table().data();
  RawConditions rc{t, n};

  // One spec = 2n+1 base-n digits: (c, alpha, beta).
  auto spec_at = [&](std::uint64_t index, Element& c, std::vector<Element>& alpha,
                     std::vector<Element>& beta) {
    c = static_cast<Element>(index % n);
    index /= n;
    for (int i = 0; i < n; ++i, index /= n) alpha[i] = index % n;
    for (int i = 0; i < n; ++i, index /= n) beta[i] = index % n;
  };

  auto check_one = [&](Element c, const std::vector<Element>& alpha,
                       const std::vector<Element>& beta) -> bool {
    const bool conditions = rc.all(alpha.data(), beta.data(), c);
    const int order = n + 1;
    Element ext[25];
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) ext[a * order + b] = t[a * n + b];
    for (Element a = 0; a < n; ++a) {
      ext[n * order + a] = t[alpha[a] * n + a];
      ext[a * order + n] = t[a * n + beta[a]];
    }
    ext[n * order + n] = t[alpha[c] * n + beta[c]];
    const bool rm = !raw::right_modular_violation(ext, order).has_value();
    return conditions == rm;
  };

  std::uint64_t total = 1;
  for (int i = 0; i < 2 * n + 1; ++i) total *= n;

  struct ShardResult {
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> first_bad;
  };

  const bool exhaustive = n <= 3;
  const std::uint64_t work = exhaustive ? total : budget;
  const int shards = std::min<std::uint64_t>(64, std::max<std::uint64_t>(1, work / 1024));

  auto shard_fn = [&](int s) -> ShardResult {
    ShardResult r;
    Element c;
    std::vector<Element> alpha(n), beta(n);
    const std::uint64_t lo = work * s / shards;
    const std::uint64_t hi = work * (s + 1) / shards;
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::uint64_t index = i;
      if (!exhaustive) {
        // splitmix64 over the sample index; order 4 has a 2^18 spec space,
        // so 18 bits give a uniform draw
        std::uint64_t z = i + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        index = z % total;
      }
      spec_at(index, c, alpha, beta);
      ++r.checked;
      if (!check_one(c, alpha, beta) && !r.first_bad) r.first_bad = index;
    }
    return r;
  };

  const auto results = run_shards<ShardResult>(shards, workers, shard_fn);
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_bad;
  for (const auto& r : results) {
    checked += r.checked;
    if (r.first_bad && !first_bad) first_bad = r.first_bad;
  }

  if (first_bad) {
    Element c;
    std::vector<Element> alpha(n), beta(n);
    spec_at(*first_bad, c, alpha, beta);
    std::vector<Element> witness{c};
    witness.insert(witness.end(), alpha.begin(), alpha.end());
    witness.insert(witness.end(), beta.begin(), beta.end());
    return {false, witness, "conditions and extension disagree"};
  }
  return {true, std::nullopt, "checked=" + std::to_string(checked)};
}

std::string format_spec(const ExtensionSpec& spec) {
  const Magma& g = spec.base;
  std::ostringstream out;
  out << "c = " << g.element_name(spec.c) << '\n';
  out << "alpha:";
  for (Element a = 0; a < g.order(); ++a)
    out << ' ' << g.element_name(a) << "->" << g.element_name(spec.alpha[a]);
  out << '\n' << "beta:";
  for (Element a = 0; a < g.order(); ++a)
    out << ' ' << g.element_name(a) << "->" << g.element_name(spec.beta[a]);
  out << '\n';
  return out.str();
}

}  // namespace rmg

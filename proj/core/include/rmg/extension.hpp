#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmg/magma.hpp"
#include "rmg/report.hpp"

namespace rmg {

/// A one-point extension of a base groupoid G by a new element x: the class
/// c of x and the maps alpha, beta on G that define the new products via the
/// generalised-inflation law.
struct ExtensionSpec {
  Magma base;
  Element c = 0;
  std::vector<Element> alpha;  // total on base carrier
  std::vector<Element> beta;
};

/// The three equations characterizing when the one-point extension of a
/// right modular base is again right modular:
///   (1) ((a alpha)a)b = (ba)(beta(ba))        for all a, b
///   (2) (a(beta a))b = (b(beta b))a           for all a, b
///   (3) ((c alpha)(beta c))a = (a(beta a))(beta(a(beta a)))  for all a
/// Witness names the first failing equation ("eq1"/"eq2"/"eq3") and its
/// arguments. The base itself need not be right modular for the check.
PropertyReport extension_conditions(const ExtensionSpec& spec);

/// The order n+1 table on base + {x}: base cells copied,
/// x*a = (a alpha)*a, a*x = a*(beta a), x*x = (c alpha)*(beta c).
Magma build_extension(const ExtensionSpec& spec);

/// All one-point right modular generalised-inflation extensions of a right
/// modular base: iterates every (c, alpha, beta) in lexicographic order,
/// keeps specs passing extension_conditions, and emits the first spec for
/// each distinct table (per canonical form instead when dedupe is set).
std::vector<std::pair<ExtensionSpec, Magma>> enumerate_rm_extensions(
    const Magma& base, bool dedupe);

/// Checks extension_conditions(spec) == is_right_modular(build_extension(spec))
/// over the spec space: exhaustively for base order <= 3, over `budget`
/// deterministically sampled specs at order 4. detail carries the number of
/// specs checked; witness flattens the first discrepant spec (c, alpha, beta).
PropertyReport cross_validate_extension_conditions(const Magma& base,
                                                   std::uint64_t budget,
                                                   int workers = 0);

/// Spec text format: "c = <name>", "alpha: a->.. ..", "beta: ..".
std::string format_spec(const ExtensionSpec& spec);

}  // namespace rmg

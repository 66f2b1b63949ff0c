#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmg/magma.hpp"
#include "rmg/report.hpp"

namespace rmg {

/// Proof object that G is an inflation of U: a retraction phi onto U with
/// x*y = phi(x)*phi(y) for all x, y.
struct RetractionWitness {
  std::vector<Element> phi;  // indexed over G's carrier, images in U
};

/// Proof object that G is a generalised inflation of U. alpha[x]/beta[x]
/// are maps U -> U indexed by position in u_set.members(); for u in U they
/// are the constant map to u. Product law: for x in G_u, y in G_v,
/// x*y = (v alpha_x) * (beta_y u).
struct GenInflationWitness {
  std::vector<Element> cls;                 // class map G -> U, cls[u] = u on U
  std::vector<std::vector<Element>> alpha;  // [x][member position] -> element
  std::vector<std::vector<Element>> beta;
};

struct WitnessClassification {
  bool symmetric = false;  // u alpha_x == beta_x u for all x, u
  bool constant = false;   // u alpha_x == v alpha_x for all x, u, v

  /// The notion reported to users requires symmetric first.
  bool constant_gen_inflation() const { return symmetric && constant; }
};

PropertyReport verify_retraction(const Magma& g, const ElementSet& u_set,
                                 const RetractionWitness& w);

/// Backtracking over candidate images for x outside U, pruned by the
/// necessary border conditions x*v = phi(x)*v and v*x = v*phi(x); returns
/// the lexicographically least witness or nullopt.
std::optional<RetractionWitness> find_retraction(const Magma& g,
                                                 const ElementSet& u_set);

PropertyReport verify_gen_inflation(const Magma& g, const ElementSet& u_set,
                                    const GenInflationWitness& w);

/// Constraint search over class and map assignments for elements outside U.
/// Border cells force candidate sets (x*w = (w alpha_x)*w, w*x = w*(beta_x w));
/// cells with both factors outside U are verified against the law. Returns
/// the lexicographically least witness (class, then alpha, then beta) or
/// nullopt. Bounded by Config::max_adjoined.
std::optional<GenInflationWitness> find_gen_inflation(const Magma& g,
                                                      const ElementSet& u_set);

WitnessClassification classify_witness(const GenInflationWitness& w);

/// phi(x) = the common value of alpha_x; requires a symmetric constant
/// witness.
RetractionWitness constant_witness_to_retraction(const GenInflationWitness& w);

/// The constant witness with alpha_x = beta_x = c_{phi(x)}.
GenInflationWitness retraction_to_constant_witness(const Magma& g,
                                                   const ElementSet& u_set,
                                                   const RetractionWitness& w);

/// All S with square_set(g) <= S <= carrier (every such S is closed),
/// in increasing size, then lexicographic member order.
std::vector<ElementSet> candidate_subgroupoids(const Magma& g);

/// Builds the generalised inflation of `base` by adjoined elements with the
/// given classes and maps (indexed over base's full carrier); the adjoined
/// elements follow the base carrier. Used to generate extension tables.
Magma build_gen_inflation(const Magma& base,
                          const std::vector<Element>& classes,
                          const std::vector<std::vector<Element>>& alphas,
                          const std::vector<std::vector<Element>>& betas);

/// Witness text formats, fixed for golden diffs.
std::string format_witness(const Magma& g, const ElementSet& u_set,
                           const RetractionWitness& w);
std::string format_witness(const Magma& g, const ElementSet& u_set,
                           const GenInflationWitness& w);

}  // namespace rmg

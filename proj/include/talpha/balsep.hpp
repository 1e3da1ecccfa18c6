#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talpha/claims.hpp"
#include "talpha/hub_division.hpp"
#include "talpha/treedec.hpp"

namespace talpha {

class VerificationFailed : public Error {
 public:
  using Error::Error;
};
class Unsolvable : public Error {
 public:
  using Error::Error;
};

/// A verified (w, c)-balanced separator with a clique partition of its vertices.
struct BalancedSeparator {
  VertexSet x;
  std::vector<VertexSet> cover;
  Rational threshold{1, 2};
  std::vector<Rational> component_weights;  ///< components of G \ X, in canonical order
  std::string route;
  Transcript assertions;

  int cover_size() const { return static_cast<int>(cover.size()); }
};

/// True when every component of G \ x weighs at most c.
bool balances(const Graph& g, const WeightFunction& w, const VertexSet& x, const Rational& c = Rational(1, 2));

/// Verifies x and attaches component weights and a small clique partition.
/// Throws VerificationFailed when x does not balance.
BalancedSeparator certify(const Graph& g, const WeightFunction& w, const VertexSet& x, const Rational& c,
                          const std::string& route);

/// A bag of the decomposition found by walking towards heavy components.
BalancedSeparator centroid_bag_separator(const Graph& g, const TreeDecomposition& td, const WeightFunction& w,
                                         const Rational& c = Rational(1, 2));

/// Centroid bag of the explicit decomposition of a (3PC, wheel)-free graph;
/// clique cover at most 2. Throws NotInClass.
BalancedSeparator balanced_separator_wheelfree(const Graph& g, const WeightFunction& w);

/// Minimum-cardinality balanced separator, trying sizes 0..size_limit; ties go
/// to the lightest heaviest component, then lexicographic order. nullopt when
/// none exists within the limit or the subset budget runs out (then *exhausted
/// is set).
std::optional<BalancedSeparator> exhaustive_balanced_separator(const Graph& g, const WeightFunction& w,
                                                               const Rational& c, int size_limit,
                                                               long long subset_budget = 5'000'000,
                                                               bool* exhausted = nullptr);

/// Fewest maximal cliques whose union balances (hence minimum clique cover
/// among balanced separators), up to max_cliques.
std::optional<BalancedSeparator> clique_union_balanced_separator(const Graph& g, const WeightFunction& w,
                                                                 const Rational& c, int max_cliques,
                                                                 long long subset_budget = 2'000'000,
                                                                 bool* exhausted = nullptr);

/// Separator of the central bag under its inherited weights, in host ids.
/// Asserts cover <= 9 (AssertionFailed otherwise).
BalancedSeparator balanced_separator_central_bag(const Graph& g, const WeightFunction& w, const HubDivision& hd,
                                                 long long search_budget = 2'000'000);

/// Bipartite graph of outside components (A side, ids 0..r-1) and bag
/// components (B side, ids r..r+s-1).
struct AuxBipartite {
  std::vector<VertexSet> d;  ///< components of G \ (bag ∪ X̃)
  std::vector<VertexSet> q;  ///< components of bag \ X̃
  std::vector<Vertex> anchor;  ///< anchor vertex per d
  Graph h;
  VertexSet core;  ///< H_Core as a vertex set of h
  std::vector<Rational> raw_weights;  ///< w'_H
  int r() const { return static_cast<int>(d.size()); }
  int s() const { return static_cast<int>(q.size()); }
};

struct Extension {
  BalancedSeparator sep;
  VertexSet x_tilde;
  int t = 0;
  std::optional<AuxBipartite> aux;  ///< absent when X̃ carries all the weight
  VertexSet z;        ///< in h
  VertexSet z_prime;  ///< in h
  int k = 0;          ///< |Z| - 1, floored at 0
  VertexSet y;
  long long bound = 0;  ///< t + 75 t (k + 1)
  bool long_hole_scan_complete = true;
};
/// Lifts a separator of the central bag to one of G following the extension
/// argument; every internal claim is asserted. Throws AssertionFailed or
/// VerificationFailed.
Extension extend_separator(const Graph& g, const WeightFunction& w, const HubDivision& hd,
                           const BalancedSeparator& bag_separator);

/// Optional record of what the oracle did, for reports and acceptance runs.
struct OracleLog {
  struct CentralBagRun {
    int n = 0;
    int cover = 0;
    bool all_hubs_unbalanced = false;
  };
  std::vector<CentralBagRun> central_bag_runs;
  std::vector<Extension> extensions;
  std::vector<std::string> findings;  ///< fallbacks and their reasons
};

/// Dispatcher: balancing clique cutset; clique cutset with recursion into the
/// heavy side; hub division, central bag and extension; exhaustive fallback.
/// The result is always verified on (G, w). AssertionFailed propagates.
BalancedSeparator weighted_separator_oracle(const Graph& g, const WeightFunction& w, OracleLog* log = nullptr);

}  // namespace talpha

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "talpha/claims.hpp"
#include "talpha/cover.hpp"
#include "talpha/cutsets.hpp"
#include "talpha/graph.hpp"

namespace talpha {

/// Bags indexed by node; tree edges between node indices. Bags hold host vertex ids.
struct TreeDecomposition {
  int n = 0;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int add_bag(VertexSet bag);
  void add_edge(int s, int t) { edges.emplace_back(s, t); }
  int size() const { return static_cast<int>(bags.size()); }
  std::vector<std::vector<int>> adjacency() const;
};

struct TdViolation {
  int axiom = 0;  ///< 0 for a malformed tree, else the violated axiom 1..3
  std::string detail;
};
struct TdValidation {
  bool ok = true;
  std::vector<TdViolation> violations;
};
/// Exact check: the node graph is a tree, every vertex and edge is covered, and
/// each vertex's nodes induce a connected subtree.
TdValidation validate_td(const Graph& g, const TreeDecomposition& td);

struct TdStats {
  int width = -1;
  int independence = 0;
  int cover = 0;             ///< max over bags of the best known χ̄ upper bound
  int cover_lower = 0;       ///< max over bags of the certified χ̄ lower bound
  bool cover_exact = true;   ///< every bag's χ̄ settled exactly
  std::vector<int> bag_independence;
  std::vector<int> bag_cover;
};
TdStats td_stats(const Graph& g, const TreeDecomposition& td, int cover_guard = 24);

TreeDecomposition single_bag(const Graph& g);
/// Fan decomposition of a hole given in cyclic order: bags {c0, ci, ci+1}.
TreeDecomposition hole_fan(int n, const std::vector<Vertex>& cycle);

/// Decomposition of a (3PC, wheel)-free graph with every bag covered by two
/// cliques: complete atoms become one bag, hole atoms a fan. Throws NotInClass.
TreeDecomposition wheel_free_decomposition(const Graph& g);

class MissingCutCliqueBag : public Error {
 public:
  using Error::Error;
};
struct Composition {
  TreeDecomposition td;
  std::vector<int> repaired;  ///< atoms whose decomposition lacked a bag holding the cut clique
};
/// Joins per-atom decompositions (host ids) along the cut cliques of the atom tree.
Composition compose_td_over_atoms(const Graph& g, const AtomTree& atoms, const std::vector<TreeDecomposition>& parts);

/// Exact tree-independence number by dynamic programming over elimination orderings.
/// Throws TooLarge past the guard.
int ta_exact_small(const Graph& g, int guard = 10);

/// (4k+1 choose 2) + k, the bag cover bound of the separator recursion.
long long g_bound(int k);

struct BalancedSeparator;

/// Separator source for build_td: gets an induced subgraph (local ids) and a weight function.
using SeparatorOracle = std::function<BalancedSeparator(const Graph&, const WeightFunction&)>;

class OracleFailure : public Error {
 public:
  OracleFailure(const std::string& what, int cover) : Error(what), cover_(cover) {}
  int cover() const { return cover_; }

 private:
  int cover_;
};
class CoverBudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct BuildReport {
  int oracle_calls = 0;
  int max_oracle_cover = 0;
  int depth = 0;
  int guard_hits = 0;  ///< recursion steps that did not shrink (never expected)
  Transcript assertions;
};
/// Recursive construction from balanced separators with clique cover at most k.
/// Throws OracleFailure when the oracle exceeds k, CoverBudgetExceeded when the
/// carried set cannot be re-covered.
TreeDecomposition build_td(const Graph& g, const SeparatorOracle& oracle, int k, BuildReport* report = nullptr);

struct AtomReport {
  VertexSet vertices;
  std::string route;  ///< "complete", "hole" or "separators"
  int k = 0;          ///< bound handed to the builder (separators route)
  BuildReport build;
};
struct PipelineResult {
  TreeDecomposition td;
  TdStats stats;
  std::vector<AtomReport> atoms;
  std::vector<int> repaired;
  Transcript assertions;
};
struct PipelineOptions {
  SeparatorOracle oracle;  ///< defaults to weighted_separator_oracle
  int max_k = 64;
  int cover_guard = 24;
};
/// Atoms, per-atom decompositions from the separator recursion (starting at
/// k = 1 and raising k to the oracle's cover when it is exceeded), composition.
PipelineResult ta_pipeline(const Graph& g, const PipelineOptions& options = {});

/// PACE-style text: "s td <bags> <max bag size> <n>", "b <i> <v...>", "<i> <j>"; 1-based.
void write_td(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition read_td(std::istream& in);

}  // namespace talpha

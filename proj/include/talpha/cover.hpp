#pragma once

#include <vector>

#include "talpha/graph.hpp"
#include "talpha/witness.hpp"

namespace talpha {

struct CoverGuards {
  int alpha_omega = 40;
  int chi_bar = 20;
};

struct Invariants {
  int alpha = 0;
  int omega = 0;
  int chi_bar = 0;
};

/// Exact α, ω and χ̄. Throws TooLarge past the guards.
Invariants exact_invariants(const Graph& g, const CoverGuards& guards = {});

int independence_number(const Graph& g, const VertexSet& within);
inline int independence_number(const Graph& g) { return independence_number(g, g.all()); }
/// Lexicographically least maximum stable set of G[within].
VertexSet maximum_stable_set(const Graph& g, const VertexSet& within);
int clique_number(const Graph& g, const VertexSet& within);

struct CliqueCover {
  std::vector<VertexSet> cliques;
  int alpha_lower_bound = 0;
  int size() const { return static_cast<int>(cliques.size()); }
};

/// True if the parts are disjoint cliques whose union is `covered`.
bool is_clique_cover(const Graph& g, const std::vector<VertexSet>& parts, const VertexSet& covered);

/// A minimum partition of G[within] into cliques.
CliqueCover minimum_clique_cover(const Graph& g, const VertexSet& within);
inline int clique_cover_number(const Graph& g, const VertexSet& within) {
  return minimum_clique_cover(g, within).size();
}

class NotC4Free : public Error {
 public:
  explicit NotC4Free(Witness w) : Error("graph contains a C4"), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Cover of G[within] with at most (α+1 choose 2) cliques, built from a
/// maximum stable set. Throws NotC4Free.
CliqueCover clique_cover_c4free(const Graph& g, const VertexSet& within);
inline CliqueCover clique_cover_c4free(const Graph& g) { return clique_cover_c4free(g, g.all()); }

/// Greedy clique partition (no optimality claim).
std::vector<VertexSet> greedy_clique_cover(const Graph& g, const VertexSet& within);

/// All maximal cliques of G[within], canonically ordered.
std::vector<VertexSet> maximal_cliques(const Graph& g, const VertexSet& within);
inline std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.all()); }

/// χ̄ of a vertex set: exact when |s| <= guard, otherwise a certified range.
struct CoverBound {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
  std::vector<VertexSet> cover;  ///< achieves `upper`
};
CoverBound cover_bound(const Graph& g, const VertexSet& s, int guard = 20);

}  // namespace talpha

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "talpha/graph.hpp"

namespace talpha {

class VertexBalanced : public Error {
 public:
  using Error::Error;
};
class PropertyViolation : public Error {
 public:
  using Error::Error;
};
class NotSmooth : public Error {
 public:
  using Error::Error;
};
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

struct Balance {
  VertexSet balanced;
  VertexSet unbalanced;
};
/// Splits V(G): v is balanced when every component of G \ N[v] weighs at most 1/2.
Balance balanced_vertices(const Graph& g, const WeightFunction& w);
bool is_balanced(const Graph& g, const WeightFunction& w, Vertex v);

/// A separation (A, C, B) with a designated centre v, C ⊆ N[v].
struct StarSeparation {
  Vertex v = -1;
  Separation s;
};

/// B = heaviest component of G \ N[v] (ties: smallest least vertex),
/// C = {v} ∪ (N(v) ∩ N(B)), A = the rest. Throws VertexBalanced.
StarSeparation canonical_star_separation(const Graph& g, const WeightFunction& w, Vertex v);

/// x ≤_A y iff x = y or y ∈ A_x, on a set U of unbalanced vertices.
struct LeqA {
  VertexSet u;
  std::vector<StarSeparation> seps;  ///< canonical separation per member of u, ascending
  std::vector<std::pair<Vertex, Vertex>> pairs;
  VertexSet minimal;
  const StarSeparation& sep(Vertex v) const;
  bool leq(Vertex x, Vertex y) const;
};
LeqA leq_a(const Graph& g, const WeightFunction& w, const VertexSet& u);

struct PosetCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
/// Reflexivity, antisymmetry and transitivity of the relation, checked exhaustively.
PosetCheck check_partial_order(const LeqA& r);

/// Revised separation for every u ∈ X: C grows by N(u) ∩ N(x) for each
/// x ∈ X ∩ C_u \ {u}. The four relations to the canonical separation are
/// verified; throws PropertyViolation.
std::vector<StarSeparation> revised_collection(const Graph& g, const WeightFunction& w, const VertexSet& x);

/// Every component of A1 ∪ A2 is a component of A1 or of A2.
bool nearly_non_crossing(const Graph& g, const Separation& s1, const Separation& s2);

/// Separations with their centres, in the fixed anchor order.
struct SmoothCollection {
  std::vector<StarSeparation> members;
  VertexSet centres(int n) const;
};
struct SmoothReport {
  bool ok = true;
  /// Violations tagged with the clause: "non-crossing", "centre", "centres-outside-A", "separation".
  std::vector<std::pair<std::string, std::string>> violations;
};
SmoothReport smooth_check(const Graph& g, const WeightFunction& w, const SmoothCollection& s);

struct CentralBag {
  VertexSet bag;
  /// Inherited weights indexed by host vertex, zero outside the bag; sums to 1.
  std::vector<Rational> weights;
  /// Components of G \ bag and, for each, the index of its anchor in the collection.
  std::vector<VertexSet> outside;
  std::vector<int> anchor;
  /// A* part per collection member.
  std::vector<VertexSet> a_star;

  /// The bag as a graph with its inherited weight function.
  std::pair<InducedSubgraph, WeightFunction> restricted(const Graph& g) const;
};
/// Throws NotSmooth when the collection fails smooth_check.
CentralBag central_bag(const Graph& g, const WeightFunction& w, const SmoothCollection& s);

/// B1 ∪ C1 ⊆ B2 ∪ C2. Throws PreconditionViolated unless both are star
/// separations with connected B and N(B) = C minus the centre.
bool shield_check(const Graph& g, const StarSeparation& s1, const StarSeparation& s2);

}  // namespace talpha

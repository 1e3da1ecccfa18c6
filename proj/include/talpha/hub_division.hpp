#pragma once

#include <map>
#include <vector>

#include "talpha/claims.hpp"
#include "talpha/cutsets.hpp"
#include "talpha/separations.hpp"
#include "talpha/structures.hpp"

namespace talpha {

/// Hub ordering, the first balanced hub, the ≤_A-minimal prefix hubs, their
/// revised separations and the resulting central bag with inherited weights.
struct HubDivision {
  std::vector<Vertex> order;                          ///< hubs in elimination order
  std::vector<std::vector<VertexSet>> certificates;   ///< ≤ 3 cliques per hub, residual neighbourhood
  VertexSet hubs;
  VertexSet unbalanced;
  /// Number of leading unbalanced hubs; the first balanced hub is order[prefix] when prefix < order.size().
  int prefix = 0;
  VertexSet m_set;
  LeqA relation;
  SmoothCollection collection;
  CentralBag bag;
  VertexSet bag_hubs;  ///< Hub(bag)
  /// Evidence for the neighbourhood bounds used later.
  std::map<Vertex, std::vector<VertexSet>> minimal_covers;  ///< v ∈ M: N_bag(v) \ Hub(bag), ≤ 2 cliques
  std::map<Vertex, std::vector<VertexSet>> prefix_covers;   ///< prefix hubs: N_bag(x), ≤ 5 cliques
  Transcript transcript;

  bool all_hubs_unbalanced() const { return prefix == static_cast<int>(order.size()); }
  Vertex first_balanced_hub() const { return all_hubs_unbalanced() ? -1 : order[prefix]; }
  /// 1-based index of the first balanced hub in the order (size + 1 when none).
  int m() const { return prefix + 1; }
};

/// Throws AssertionFailed when a structural claim fails (out-of-class input
/// or a fault), and NotFound when no elimination order is available.
HubDivision hub_division(const Graph& g, const WeightFunction& w, const Budget& budget = {});

}  // namespace talpha

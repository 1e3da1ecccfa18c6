#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "talpha/graph.hpp"
#include "talpha/structures.hpp"

namespace talpha {

class BadParams : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

Graph hole(int n);
Graph clique(int n);
/// Two ends joined by paths with l1, l2, l3 edges (each >= 2).
Graph theta(int l1, int l2, int l3);
/// Apex joined to the corners of a triangle by paths of l1, l2, l3 edges (at most one equal to 1).
Graph pyramid(int l1, int l2, int l3);
/// Two triangles joined corner to corner by paths of l1, l2, l3 edges.
Graph prism(int l1, int l2, int l3);
/// Rim 0..n-1 plus hub n adjacent to the listed rim positions (1-based).
Graph wheel(int n, const std::vector<int>& spokes);
/// Triangle-free graph with chromatic number k (k >= 2): K2, C5, the Grötzsch graph, ...
Graph mycielski(int k);
/// Disjoint union of a and b plus every edge between them.
Graph join(const Graph& a, const Graph& b);
/// Join of two copies of the complement of mycielski(c): independence number 2,
/// while each half needs c cliques.
Graph ta_tc_gap(int c);

/// Family by name: hole n | clique n | theta l1 l2 l3 | pyramid [l1 l2 l3] |
/// prism [l1 l2 l3] | wheel n s1 s2 ... | mycielski k | ta_tc_gap c.
/// The defining property is re-verified; throws BadParams.
Graph gen_family(const std::string& name, const std::vector<int>& params);

/// Rejection sampling: G(n, p) graphs until one is in class C.
std::optional<Graph> gen_random_class_c(int n, double density, std::uint64_t seed, int tries = 2000);

/// Class-C graph without a clique cutset, grown from an odd hole by adding
/// vertices whose neighbourhood is not a clique (so no clique cutset appears).
std::optional<Graph> grow_class_c_nc(int n, std::uint64_t seed, int tries_per_vertex = 400);

/// Class-C graph built by gluing grown blocks along single vertices or edges.
std::optional<Graph> gen_class_c_mixed(int n, std::uint64_t seed);

/// (3PC, wheel)-free class-C graph: holes (length 5..9) and cliques (2..4)
/// glued along a vertex or an edge.
std::optional<Graph> gen_wheel_free(int n, std::uint64_t seed, int tries = 200);

struct CliqueSum {
  std::optional<Graph> graph;      ///< set when the result stays in C
  std::optional<Witness> witness;  ///< the obstruction created otherwise
};
/// Identifies k1[i] of g1 with k2[i] of g2; g2's other vertices follow g1's.
CliqueSum compose_clique_sum(const Graph& g1, const Graph& g2, const std::vector<Vertex>& k1,
                             const std::vector<Vertex>& k2);

}  // namespace talpha

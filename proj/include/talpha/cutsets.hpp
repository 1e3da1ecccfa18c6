#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talpha/graph.hpp"
#include "talpha/structures.hpp"

namespace talpha {

/// Thrown when an operation that needs class membership meets a witness against it.
class NotInClass : public Error {
 public:
  explicit NotInClass(Witness w) : Error("graph contains a " + to_string(w.kind)), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Minimal triangulation by MCS-M, with the data needed for clique
/// minimal separators.
struct Triangulation {
  std::vector<VertexSet> adj;      ///< adjacency of the chordal supergraph
  std::vector<int> number;         ///< elimination number per vertex (0 = eliminated first)
  std::vector<Vertex> order;       ///< order[i] = vertex with number i
  VertexSet generators;            ///< vertices whose higher neighbourhood is a minimal separator
  /// Neighbours of v in the triangulation that are eliminated after v.
  VertexSet higher(Vertex v) const;
};
Triangulation mcs_m(const Graph& g);

struct CliqueCutset {
  VertexSet k;
  std::vector<VertexSet> sides;  ///< components of G \ K
};
/// The lexicographically least clique minimal separator, or none. On a
/// disconnected graph this is the empty set.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);
/// All clique minimal separators, canonically ordered.
std::vector<VertexSet> clique_minimal_separators(const Graph& g);

struct Atom {
  VertexSet vertices;
  VertexSet cut_clique;  ///< clique shared with the parent (empty at the root)
  int parent = -1;
  std::vector<int> children;
};

/// Atoms in extraction order: each atom except the last is split off along
/// its cut clique from what remains; the last one is the root.
struct AtomTree {
  std::vector<Atom> atoms;
  int root() const { return static_cast<int>(atoms.size()) - 1; }
  /// Vertices of atom i not in its cut clique.
  VertexSet private_vertices(int i) const { return atoms[i].vertices - atoms[i].cut_clique; }
};
AtomTree atom_decomposition(const Graph& g);

struct UsClass {
  enum class Kind { complete, hole, clique_cutset };
  Kind kind = Kind::complete;
  VertexSet cutset;
};
/// Throws NotInClass with a 3PC or wheel witness.
UsClass us_classify(const Graph& g);
std::string to_string(UsClass::Kind k);

struct StarCutset {
  Vertex center = -1;
  VertexSet cutset;     ///< contains the centre, inside its closed neighbourhood
  VertexSet component;  ///< a component of G \ cutset, minimal over all star cutsets
};
std::optional<StarCutset> find_star_cutset_minimal(const Graph& g);

class NotFound : public Error {
 public:
  using Error::Error;
};

struct Trisimplicial {
  Vertex v = -1;
  std::vector<VertexSet> cliques;  ///< partition of N(v) into at most three cliques
  std::string route;
};
/// Throws NotFound when the argument does not yield a certified vertex.
Trisimplicial trisimplicial_vertex(const Graph& g);
/// A vertex private to a leaf atom, with its (at most two) neighbourhood cliques.
Trisimplicial bisimplicial_vertex_wheel_free(const Graph& g);

struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<std::vector<VertexSet>> certificates;  ///< in the residual graph at each step
  VertexSet hubs;
  std::vector<Vertex> hub_order;                           ///< order restricted to hubs
  std::vector<std::vector<VertexSet>> hub_certificates;
};
EliminationOrder elimination_order(const Graph& g, const Budget& budget = {});

}  // namespace talpha

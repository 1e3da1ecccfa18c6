#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "talpha/error.hpp"
#include "talpha/vertex_set.hpp"

namespace talpha {

using Rational = boost::multiprecision::mpq_rational;
using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// A vertex-induced subgraph together with the map back to its host.
struct InducedSubgraph;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidInput on self-loops, repeated edges, or out-of-range ids.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  /// N(X): vertices outside X with a neighbor in X.
  VertexSet neighbors(const VertexSet& x) const;
  /// N[X] = X ∪ N(X).
  VertexSet closed_neighbors(const VertexSet& x) const { return x | neighbors(x); }
  int degree(Vertex v) const { return adj_[v].size(); }

  VertexSet all() const { return VertexSet::full(n()); }
  VertexSet empty_set() const { return VertexSet(n()); }
  VertexSet set(std::initializer_list<Vertex> members) const { return VertexSet(n(), members); }

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  bool is_clique(const VertexSet& s) const;
  bool is_stable(const VertexSet& s) const;
  /// True if no edge joins a and b.
  bool anticomplete(const VertexSet& a, const VertexSet& b) const;

  Graph complement() const;
  InducedSubgraph induced(const VertexSet& s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  /// Label of v for reporting: its label if present, else the 1-based id.
  std::string label(Vertex v) const;

 private:
  std::vector<VertexSet> adj_;
  int m_ = 0;
  std::vector<std::string> labels_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  int parent_n = 0;

  /// Local vertex set -> host vertex set.
  VertexSet lift(const VertexSet& local) const;
  /// Host vertex set (restricted to the subgraph) -> local vertex set.
  VertexSet lower(const VertexSet& host) const;
  /// Host vertex -> local id, or -1 if absent.
  Vertex local(Vertex host) const;
};

/// Incremental edge list used to assemble a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : n_(n) {}
  Vertex add_vertex() { return n_++; }
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  int n() const { return n_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Nonnegative exact rational weights summing to exactly 1.
class WeightFunction {
 public:
  WeightFunction() = default;
  /// Throws InvalidInput on negative entries or total != 1.
  explicit WeightFunction(std::vector<Rational> weights);

  static WeightFunction uniform(int n);
  /// All mass on one vertex.
  static WeightFunction point(int n, Vertex v);
  /// 1/|s| on each member of s (s nonempty).
  static WeightFunction uniform_on(const VertexSet& s);

  int size() const { return static_cast<int>(w_.size()); }
  const Rational& operator[](Vertex v) const { return w_[v]; }
  Rational of(const VertexSet& s) const;
  const std::vector<Rational>& values() const { return w_; }

  /// Weights of the subgraph's vertices (no renormalization; total need not be 1).
  std::vector<Rational> restricted(const InducedSubgraph& sub) const;

 private:
  std::vector<Rational> w_;
};

/// Sum of raw weights over s.
Rational total_weight(const std::vector<Rational>& w, const VertexSet& s);

/// A triple (A, C, B) of vertex sets.
struct Separation {
  VertexSet a;
  VertexSet c;
  VertexSet b;
};

struct SeparationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Connected components of G[s], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
/// The component of G[s] containing v (v must be in s).
VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v);
bool is_connected(const Graph& g, const VertexSet& s);
/// Shortest path from `from` to `to` whose interior lies in `through`;
/// empty when none exists. Ties go to the smallest vertex id at each BFS layer.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& through);

/// Thrown when a diamond blocks a diamond-free-only operation.
class DiamondPresent : public Error {
 public:
  explicit DiamondPresent(std::vector<Vertex> diamond);
  /// {u, v, x, y}: u and v adjacent, both adjacent to x and y, x and y non-adjacent.
  const std::vector<Vertex>& diamond() const { return diamond_; }

 private:
  std::vector<Vertex> diamond_;
};

class NotAClique : public Error {
 public:
  using Error::Error;
};

class AmbiguousExtension : public Error {
 public:
  using Error::Error;
};

/// Partition of N(v) into pairwise anticomplete cliques (unique when it exists).
/// Throws DiamondPresent when some part is not a clique.
std::vector<VertexSet> neighborhood_clique_partition(const Graph& g, Vertex v);

/// The maximal clique containing k; k itself when |k| <= 1.
/// Throws NotAClique, or AmbiguousExtension if two maximal cliques contain k.
VertexSet maximal_clique_extension(const Graph& g, const VertexSet& k);

SeparationReport is_separation(const Graph& g, const Separation& s);

}  // namespace talpha

#include "talpha/graph.hpp"

#include <algorithm>
#include <deque>

namespace talpha {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
      throw InvalidInput("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
  }
}

VertexSet Graph::neighbors(const VertexSet& x) const {
  VertexSet out(n());
  for (Vertex v : x) out |= adj_[v];
  return out - x;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_stable(const VertexSet& s) const {
  for (Vertex v : s)
    if (adj_[v].intersects(s)) return false;
  return true;
}

bool Graph::anticomplete(const VertexSet& a, const VertexSet& b) const {
  for (Vertex v : a)
    if (adj_[v].intersects(b)) return false;
  return true;
}

Graph Graph::complement() const {
  Graph g(n());
  for (Vertex v = 0; v < n(); ++v) {
    g.adj_[v] = ~adj_[v];
    g.adj_[v].erase(v);
  }
  g.m_ = n() * (n() - 1) / 2 - m_;
  g.labels_ = labels_;
  return g;
}

InducedSubgraph Graph::induced(const VertexSet& s) const {
  InducedSubgraph sub;
  sub.parent_n = n();
  sub.to_parent = s.to_vector();
  const int k = static_cast<int>(sub.to_parent.size());
  std::vector<Vertex> local(static_cast<std::size_t>(n()), -1);
  for (int i = 0; i < k; ++i) local[sub.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    const Vertex u = sub.to_parent[i];
    for (Vertex v : adj_[u] & s)
      if (v > u) edges.emplace_back(i, local[v]);
  }
  sub.graph = Graph(k, edges);
  if (!labels_.empty()) {
    std::vector<std::string> l;
    for (Vertex v : sub.to_parent) l.push_back(labels_[v]);
    sub.graph.labels_ = std::move(l);
  }
  return sub;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n())
    throw InvalidInput("label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

VertexSet InducedSubgraph::lift(const VertexSet& local_set) const {
  VertexSet out(parent_n);
  for (Vertex v : local_set) out.insert(to_parent[v]);
  return out;
}

VertexSet InducedSubgraph::lower(const VertexSet& host) const {
  VertexSet out(graph.n());
  for (int i = 0; i < graph.n(); ++i)
    if (host.contains(to_parent[i])) out.insert(i);
  return out;
}

Vertex InducedSubgraph::local(Vertex host) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), host);
  if (it == to_parent.end() || *it != host) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges_.begin(), edges_.end(), Edge{u, v}) != edges_.end();
}

WeightFunction::WeightFunction(std::vector<Rational> weights) : w_(std::move(weights)) {
  Rational total = 0;
  for (std::size_t v = 0; v < w_.size(); ++v) {
    if (w_[v] < 0) throw InvalidInput("negative weight on vertex " + std::to_string(v + 1));
    total += w_[v];
  }
  if (total != 1) throw InvalidInput("weights sum to " + total.str() + ", expected 1");
}

WeightFunction WeightFunction::uniform(int n) {
  return WeightFunction(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

WeightFunction WeightFunction::point(int n, Vertex v) {
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  w[v] = 1;
  return WeightFunction(std::move(w));
}

WeightFunction WeightFunction::uniform_on(const VertexSet& s) {
  std::vector<Rational> w(static_cast<std::size_t>(s.universe()), Rational(0));
  const int k = s.size();
  for (Vertex v : s) w[v] = Rational(1, k);
  return WeightFunction(std::move(w));
}

Rational WeightFunction::of(const VertexSet& s) const { return total_weight(w_, s); }

std::vector<Rational> WeightFunction::restricted(const InducedSubgraph& sub) const {
  std::vector<Rational> out;
  out.reserve(sub.to_parent.size());
  for (Vertex v : sub.to_parent) out.push_back(w_[v]);
  return out;
}

Rational total_weight(const std::vector<Rational>& w, const VertexSet& s) {
  Rational total = 0;
  for (Vertex v : s) total += w[v];
  return total;
}

VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v) {
  VertexSet comp(g.n());
  comp.insert(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    for (Vertex u : frontier) next |= g.neighbors(u);
    next &= s;
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.first());
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return component_of(g, s, s.first()) == s;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& through) {
  if (from == to) return {from};
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue{from};
  VertexSet seen(g.n());
  seen.insert(from);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (g.adjacent(u, to)) {
      std::vector<Vertex> path{to};
      for (Vertex x = u; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex x : (g.neighbors(u) & through) - seen) {
      seen.insert(x);
      parent[x] = u;
      queue.push_back(x);
    }
  }
  return {};
}

DiamondPresent::DiamondPresent(std::vector<Vertex> diamond)
    : Error("graph contains a diamond"), diamond_(std::move(diamond)) {}

std::vector<VertexSet> neighborhood_clique_partition(const Graph& g, Vertex v) {
  auto parts = components(g, g.neighbors(v));
  for (const auto& part : parts) {
    for (Vertex y : part) {
      VertexSet others = part & g.neighbors(y);
      for (Vertex x : others)
        for (Vertex z = others.next(x); z >= 0; z = others.next(z))
          if (!g.adjacent(x, z)) throw DiamondPresent({v, y, x, z});
    }
  }
  return parts;
}

VertexSet maximal_clique_extension(const Graph& g, const VertexSet& k) {
  if (!g.is_clique(k)) throw NotAClique("set is not a clique");
  if (k.size() <= 1) return k;
  VertexSet common = g.all() - k;
  for (Vertex v : k) common &= g.neighbors(v);
  if (!g.is_clique(common))
    throw AmbiguousExtension("clique has two distinct maximal extensions");
  return k | common;
}

SeparationReport is_separation(const Graph& g, const Separation& s) {
  SeparationReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  if (s.a.intersects(s.b)) fail("A and B intersect at vertex " + g.label((s.a & s.b).first()));
  if (s.a.intersects(s.c)) fail("A and C intersect at vertex " + g.label((s.a & s.c).first()));
  if (s.b.intersects(s.c)) fail("B and C intersect at vertex " + g.label((s.b & s.c).first()));
  VertexSet missing = g.all() - (s.a | s.b | s.c);
  if (!missing.empty()) fail("vertex " + g.label(missing.first()) + " is in none of A, C, B");
  for (Vertex u : s.a) {
    VertexSet across = g.neighbors(u) & s.b;
    if (!across.empty()) {
      fail("edge " + g.label(u) + "-" + g.label(across.first()) + " joins A and B");
      break;
    }
  }
  return r;
}

}  // namespace talpha

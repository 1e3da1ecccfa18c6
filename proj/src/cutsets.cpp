#include "talpha/cutsets.hpp"

#include <algorithm>
#include <limits>

#include "talpha/cover.hpp"

namespace talpha {

VertexSet Triangulation::higher(Vertex v) const {
  VertexSet out(static_cast<int>(adj.size()));
  for (Vertex u : adj[v])
    if (number[u] > number[v]) out.insert(u);
  return out;
}

Triangulation mcs_m(const Graph& g) {
  const int n = g.n();
  Triangulation t;
  t.adj.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (Vertex v = 0; v < n; ++v) t.adj[v] = g.neighbors(v);
  t.number.assign(static_cast<std::size_t>(n), -1);
  t.order.assign(static_cast<std::size_t>(n), -1);
  t.generators = VertexSet(n);
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  VertexSet unnumbered = g.all();
  int previous = -1;
  for (int i = n - 1; i >= 0; --i) {
    Vertex x = -1;
    for (Vertex v : unnumbered)
      if (x < 0 || label[v] > label[x]) x = v;
    if (label[x] <= previous) t.generators.insert(x);
    previous = label[x];
    unnumbered.erase(x);
    t.number[x] = i;
    t.order[i] = x;
    // Bottleneck search: y is reached when some path from x through
    // unnumbered vertices has all interior labels below label[y].
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> bottleneck(static_cast<std::size_t>(n), kInf);
    VertexSet done(n);
    for (Vertex y : g.neighbors(x) & unnumbered) bottleneck[y] = -1;
    while (true) {
      Vertex z = -1;
      for (Vertex y : unnumbered - done)
        if (bottleneck[y] != kInf && (z < 0 || bottleneck[y] < bottleneck[z])) z = y;
      if (z < 0) break;
      done.insert(z);
      const int through = std::max(bottleneck[z], label[z]);
      for (Vertex y : (g.neighbors(z) & unnumbered) - done) bottleneck[y] = std::min(bottleneck[y], through);
    }
    std::vector<Vertex> raised;
    for (Vertex y : unnumbered)
      if (bottleneck[y] < label[y]) raised.push_back(y);
    for (Vertex y : raised) {
      ++label[y];
      t.adj[x].insert(y);
      t.adj[y].insert(x);
    }
  }
  return t;
}

std::vector<VertexSet> clique_minimal_separators(const Graph& g) {
  Triangulation t = mcs_m(g);
  std::vector<VertexSet> out;
  for (Vertex x : t.generators) {
    VertexSet s = t.higher(x);
    if (!g.is_clique(s)) continue;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  auto seps = clique_minimal_separators(g);
  if (seps.empty()) return std::nullopt;
  CliqueCutset c{seps.front(), components(g, g.all() - seps.front())};
  if (c.sides.size() < 2) throw InternalError("clique minimal separator does not separate");
  return c;
}

AtomTree atom_decomposition(const Graph& g) {
  AtomTree tree;
  if (g.n() == 0) return tree;
  Triangulation t = mcs_m(g);
  VertexSet rest = g.all();
  for (int i = 0; i < g.n(); ++i) {
    const Vertex x = t.order[i];
    if (!t.generators.contains(x) || !rest.contains(x)) continue;
    const VertexSet s = t.higher(x) & rest;
    if (!g.is_clique(s)) continue;
    const VertexSet c = component_of(g, rest - s, x);
    if ((rest - s - c).empty()) continue;
    tree.atoms.push_back({c | s, s, -1, {}});
    rest -= c;
  }
  tree.atoms.push_back({rest, VertexSet(g.n()), -1, {}});
  const int k = static_cast<int>(tree.atoms.size());
  for (int i = 0; i + 1 < k; ++i) {
    for (int j = i + 1; j < k; ++j)
      if (tree.atoms[i].cut_clique.is_subset_of(tree.atoms[j].vertices)) {
        tree.atoms[i].parent = j;
        tree.atoms[j].children.push_back(i);
        break;
      }
    if (tree.atoms[i].parent < 0) throw InternalError("cut clique lies in no later atom");
  }
  return tree;
}

std::string to_string(UsClass::Kind k) {
  switch (k) {
    case UsClass::Kind::complete: return "complete";
    case UsClass::Kind::hole: return "hole";
    case UsClass::Kind::clique_cutset: return "clique_cutset";
  }
  return "unknown";
}

namespace {

bool is_hole_graph(const Graph& g) {
  if (g.n() < 4 || !is_connected(g, g.all())) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::vector<VertexSet> neighbourhood_certificate(const Graph& g, Vertex v) {
  const VertexSet nb = g.neighbors(v);
  CoverBound b = cover_bound(g, nb, 20);
  if (b.upper > 3) throw NotFound("vertex " + g.label(v) + " needs more than three cliques");
  return b.cover;
}

}  // namespace

UsClass us_classify(const Graph& g) {
  Detection d = find_3pc_or_wheel(g);
  if (d.found()) throw NotInClass(*d.witness);
  if (d.status == SearchStatus::unknown) throw Error("class check ran out of budget");
  if (g.is_clique(g.all())) return {UsClass::Kind::complete, g.empty_set()};
  if (is_hole_graph(g)) return {UsClass::Kind::hole, g.empty_set()};
  if (auto c = find_clique_cutset(g)) return {UsClass::Kind::clique_cutset, c->k};
  throw InternalError("(3PC, wheel)-free graph is neither complete, a hole, nor has a clique cutset");
}

std::optional<StarCutset> find_star_cutset_minimal(const Graph& g) {
  std::optional<StarCutset> best;
  auto consider = [&](Vertex u, const VertexSet& cutset, const VertexSet& d) {
    if (best) {
      if (d.size() > best->component.size()) return;
      if (d.size() == best->component.size() && !lex_less(d, best->component)) return;
    }
    best = StarCutset{u, cutset, d};
  };
  for (Vertex u = 0; u < g.n(); ++u) {
    const VertexSet closed = g.closed_neighbors(u);
    // Components beyond the closed neighbourhood.
    for (const auto& q : components(g, g.all() - closed)) {
      VertexSet c = g.neighbors(q);
      c.insert(u);
      if (!(g.all() - q - c).empty()) consider(u, c, q);
    }
    // Single neighbours whose closed neighbourhood stays inside N[u].
    for (Vertex y : g.neighbors(u)) {
      const VertexSet ny = g.closed_neighbors(y);
      if (ny.is_subset_of(closed) && !(g.all() - ny).empty()) consider(u, g.neighbors(y), g.set({y}));
    }
  }
  return best;
}

Trisimplicial bisimplicial_vertex_wheel_free(const Graph& g) {
  if (g.n() == 0) throw NotFound("empty graph");
  AtomTree tree = atom_decomposition(g);
  const Vertex v = tree.private_vertices(0).first();
  Trisimplicial t{v, neighbourhood_certificate(g, v), tree.atoms.size() == 1 ? "single atom" : "leaf atom"};
  if (t.cliques.size() > 2) throw NotFound("leaf-atom vertex " + g.label(v) + " is not bisimplicial");
  return t;
}

Trisimplicial trisimplicial_vertex(const Graph& g) {
  if (g.n() == 0) throw NotFound("empty graph");
  Detection wheel = find_wheel(g, WheelFilter::any);
  if (wheel.status == SearchStatus::unknown) throw NotFound("wheel search ran out of budget");
  if (wheel.absent()) return bisimplicial_vertex_wheel_free(g);
  auto star = find_star_cutset_minimal(g);
  if (!star) throw NotFound("graph has a wheel but no star cutset");
  const VertexSet& d = star->component;
  const VertexSet nc = g.neighbors(star->center);
  if (d.is_subset_of(nc)) {
    if (d.size() != 1) throw NotFound("minimal component complete to its centre is not a singleton");
    const Vertex v = d.first();
    return {v, neighbourhood_certificate(g, v), "star cutset, centre complete"};
  }
  if (nc.intersects(d)) throw NotFound("minimal component is neither complete nor anticomplete to its centre");
  InducedSubgraph sub = g.induced(d);
  Trisimplicial inner = bisimplicial_vertex_wheel_free(sub.graph);
  const Vertex v = sub.to_parent[inner.v];
  return {v, neighbourhood_certificate(g, v), "star cutset, centre anticomplete"};
}

EliminationOrder elimination_order(const Graph& g, const Budget& budget) {
  EliminationOrder out;
  HubSet hubs = hub_set(g, g.all(), budget);
  if (!hubs.undetermined.empty()) throw NotFound("hub set search ran out of budget");
  out.hubs = hubs.hubs;
  VertexSet rest = g.all();
  while (!rest.empty()) {
    InducedSubgraph sub = g.induced(rest);
    Trisimplicial t = trisimplicial_vertex(sub.graph);
    const Vertex v = sub.to_parent[t.v];
    std::vector<VertexSet> cert;
    for (const auto& k : t.cliques) cert.push_back(sub.lift(k));
    out.order.push_back(v);
    if (out.hubs.contains(v)) {
      out.hub_order.push_back(v);
      out.hub_certificates.push_back(cert);
    }
    out.certificates.push_back(std::move(cert));
    rest.erase(v);
  }
  return out;
}

}  // namespace talpha

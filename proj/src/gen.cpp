#include "talpha/gen.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "talpha/cover.hpp"

namespace talpha {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw BadParams(msg);
}

// Appends a path of `len` edges from a to b through fresh vertices.
void add_path(GraphBuilder& b, Vertex a, Vertex z, int len) {
  Vertex prev = a;
  for (int i = 1; i < len; ++i) {
    const Vertex x = b.add_vertex();
    b.add_edge(prev, x);
    prev = x;
  }
  b.add_edge(prev, z);
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool in_class(const Graph& g) { return check_class(g).c == Verdict::in; }

}  // namespace

Graph hole(int n) {
  need(n >= 4, "a hole needs at least 4 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph clique(int n) {
  need(n >= 0, "negative clique size");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph theta(int l1, int l2, int l3) {
  need(l1 >= 2 && l2 >= 2 && l3 >= 2, "theta paths need at least 2 edges");
  GraphBuilder b(2);
  for (int l : {l1, l2, l3}) add_path(b, 0, 1, l);
  return b.build();
}

Graph pyramid(int l1, int l2, int l3) {
  need(l1 >= 1 && l2 >= 1 && l3 >= 1, "pyramid paths need at least 1 edge");
  need((l1 == 1) + (l2 == 1) + (l3 == 1) <= 1, "at most one pyramid path may be a single edge");
  GraphBuilder b(4);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(1, 3);
  add_path(b, 0, 1, l1);
  add_path(b, 0, 2, l2);
  add_path(b, 0, 3, l3);
  return b.build();
}

Graph prism(int l1, int l2, int l3) {
  need(l1 >= 1 && l2 >= 1 && l3 >= 1, "prism paths need at least 1 edge");
  GraphBuilder b(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) b.add_edge(u, v);
  add_path(b, 0, 3, l1);
  add_path(b, 1, 4, l2);
  add_path(b, 2, 5, l3);
  return b.build();
}

Graph wheel(int n, const std::vector<int>& spokes) {
  need(n >= 4, "a wheel rim needs at least 4 vertices");
  need(spokes.size() >= 3, "a wheel needs at least 3 spokes");
  GraphBuilder b(n + 1);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (int s : spokes) {
    need(s >= 1 && s <= n, "spoke " + std::to_string(s) + " is not a rim position");
    need(!b.has_edge(s - 1, n), "repeated spoke " + std::to_string(s));
    b.add_edge(s - 1, n);
  }
  return b.build();
}

Graph mycielski(int k) {
  need(k >= 1 && k <= 6, "mycielski index must be in 1..6");
  if (k == 1) return Graph(1);
  Graph g(2, {{0, 1}});
  for (int step = 2; step < k; ++step) {
    const int n = g.n();
    GraphBuilder b(2 * n + 1);
    for (auto [u, v] : g.edges()) {
      b.add_edge(u, v);
      b.add_edge(u, n + v);
      b.add_edge(v, n + u);
    }
    for (int i = 0; i < n; ++i) b.add_edge(n + i, 2 * n);
    g = b.build();
  }
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  GraphBuilder out(a.n() + b.n());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < b.n(); ++v) out.add_edge(u, a.n() + v);
  return out.build();
}

Graph ta_tc_gap(int c) {
  need(c >= 2 && c <= 5, "gap parameter must be in 2..5");
  const Graph half = mycielski(c).complement();
  return join(half, half);
}

Graph gen_family(const std::string& name, const std::vector<int>& p) {
  auto arity = [&](std::size_t k) { need(p.size() == k, name + " takes " + std::to_string(k) + " parameters"); };
  auto three = [&](int d1, int d2, int d3) -> std::array<int, 3> {
    if (p.empty()) return {d1, d2, d3};
    arity(3);
    return {p[0], p[1], p[2]};
  };
  Graph g;
  std::optional<StructureKind> expect;
  if (name == "hole") {
    arity(1);
    g = hole(p[0]);
    if (!is_hole(g, cyclic_order(g, g.all()))) throw InternalError("hole family is not a hole");
  } else if (name == "clique") {
    arity(1);
    g = clique(p[0]);
  } else if (name == "theta") {
    auto [a, b, c] = three(2, 2, 2);
    g = theta(a, b, c);
    expect = StructureKind::theta;
  } else if (name == "pyramid") {
    auto [a, b, c] = three(2, 2, 2);
    g = pyramid(a, b, c);
    expect = StructureKind::pyramid;
  } else if (name == "prism") {
    auto [a, b, c] = three(1, 1, 1);
    g = prism(a, b, c);
    expect = StructureKind::prism;
  } else if (name == "wheel") {
    need(p.size() >= 4, "wheel takes n and at least 3 spokes");
    g = wheel(p[0], std::vector<int>(p.begin() + 1, p.end()));
    expect = StructureKind::wheel;
  } else if (name == "mycielski") {
    arity(1);
    g = mycielski(p[0]);
  } else if (name == "ta_tc_gap") {
    arity(1);
    g = ta_tc_gap(p[0]);
    const int half = g.n() / 2;
    InducedSubgraph h = g.induced(VertexSet::prefix(g.n(), half));
    if (independence_number(g) > 2) throw InternalError("gap graph has a stable set of size 3");
    if (half <= 20 && clique_cover_number(h.graph, h.graph.all()) < p[0])
      throw InternalError("gap graph half is covered by too few cliques");
  } else {
    throw BadParams("unknown family " + name);
  }
  if (expect && !find_structure(g, *expect).found())
    throw BadParams(name + " parameters do not produce a " + to_string(*expect));
  return g;
}

std::optional<Graph> gen_random_class_c(int n, double density, std::uint64_t seed, int tries) {
  need(n >= 0 && density >= 0 && density <= 1, "bad random-graph parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  for (int t = 0; t < tries; ++t) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) b.add_edge(u, v);
    Graph g = b.build();
    if (in_class(g)) return g;
  }
  return std::nullopt;
}

std::optional<Graph> grow_class_c_nc(int n, std::uint64_t seed, int tries_per_vertex) {
  need(n >= 0, "negative size");
  if (n <= 4) return clique(n);
  std::mt19937_64 rng(seed);
  for (int restart = 0; restart < 20; ++restart) {
    const int len = pick(rng, 2, (std::min(n, 13) - 1) / 2) * 2 + 1;
    GraphBuilder b(len);
    for (int i = 0; i < len; ++i) b.add_edge(i, (i + 1) % len);
    while (b.n() < n) {
      bool grown = false;
      for (int t = 0; t < tries_per_vertex && !grown; ++t) {
        GraphBuilder trial = b;
        const int room = n - b.n();
        if (t % 3 == 2 && room >= 2) {
          // An ear: a fresh path between two non-adjacent vertices.
          const Vertex x = pick(rng, 0, b.n() - 1), y = pick(rng, 0, b.n() - 1);
          if (x == y || b.has_edge(x, y)) continue;
          add_path(trial, x, y, pick(rng, 2, std::min(room, 4) + 1));
        } else {
          // A vertex whose neighbourhood is not a clique.
          const int pool = (t % 3 == 0) ? len : b.n();
          const int s = std::min(pool, pick(rng, 2, 4));
          std::vector<Vertex> nb;
          while (static_cast<int>(nb.size()) < s) {
            const Vertex x = pick(rng, 0, pool - 1);
            if (std::find(nb.begin(), nb.end(), x) == nb.end()) nb.push_back(x);
          }
          bool is_clique = true;
          for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) is_clique = is_clique && b.has_edge(nb[i], nb[j]);
          if (is_clique) continue;
          const Vertex v = trial.add_vertex();
          for (Vertex x : nb) trial.add_edge(v, x);
        }
        if (in_class(trial.build())) {
          b = std::move(trial);
          grown = true;
        }
      }
      if (!grown) break;
    }
    if (b.n() == n) return b.build();
  }
  return std::nullopt;
}

std::optional<Graph> gen_class_c_mixed(int n, std::uint64_t seed) {
  need(n >= 1, "mixed graphs need at least one vertex");
  std::mt19937_64 rng(seed);
  Graph g(1);
  while (g.n() < n) {
    const int room = n - g.n() + 1;
    Graph block;
    if (room >= 5 && pick(rng, 0, 2) > 0) {
      auto grown = grow_class_c_nc(pick(rng, 5, std::min(room, 12)), rng());
      if (!grown) return std::nullopt;
      block = *grown;
    } else {
      block = clique(pick(rng, 2, std::min(room, 3)));
    }
    const std::vector<Vertex> at{pick(rng, 0, g.n() - 1)};
    CliqueSum s = compose_clique_sum(g, block, at, {pick(rng, 0, block.n() - 1)});
    if (!s.graph) throw InternalError("a one-vertex sum left the class");
    g = *s.graph;
  }
  return g;
}

std::optional<Graph> gen_wheel_free(int n, std::uint64_t seed, int tries) {
  need(n >= 1, "wheel-free graphs need at least one vertex");
  std::mt19937_64 rng(seed);
  Graph g(1);
  for (int t = 0; t < tries && g.n() < n; ++t) {
    const int room = n - g.n();
    const int k = (g.m() > 0 && pick(rng, 0, 2) == 0) ? 2 : 1;
    const bool as_hole = room + k >= 5 && pick(rng, 0, 2) > 0;
    const Graph piece = as_hole ? hole(pick(rng, 5, std::min(9, room + k))) : clique(pick(rng, k + 1, std::min(4, room + k)));
    std::vector<Vertex> at, on;
    if (k == 1) {
      at = {pick(rng, 0, g.n() - 1)};
      on = {pick(rng, 0, piece.n() - 1)};
    } else {
      const auto ge = g.edges();
      const auto pe = piece.edges();
      const Edge a = ge[pick(rng, 0, static_cast<int>(ge.size()) - 1)];
      const Edge b = pe[pick(rng, 0, static_cast<int>(pe.size()) - 1)];
      at = {a.first, a.second};
      on = {b.first, b.second};
    }
    CliqueSum sum = compose_clique_sum(g, piece, at, on);
    if (sum.graph) g = *sum.graph;
  }
  if (g.n() != n) return std::nullopt;
  return g;
}

CliqueSum compose_clique_sum(const Graph& g1, const Graph& g2, const std::vector<Vertex>& k1,
                             const std::vector<Vertex>& k2) {
  need(k1.size() == k2.size(), "identified cliques differ in size");
  VertexSet s1(g1.n()), s2(g2.n());
  for (Vertex v : k1) {
    need(v >= 0 && v < g1.n() && !s1.contains(v), "bad vertex in the first clique");
    s1.insert(v);
  }
  for (Vertex v : k2) {
    need(v >= 0 && v < g2.n() && !s2.contains(v), "bad vertex in the second clique");
    s2.insert(v);
  }
  need(g1.is_clique(s1) && g2.is_clique(s2), "identified sets must be cliques");
  std::vector<Vertex> map(static_cast<std::size_t>(g2.n()), -1);
  for (std::size_t i = 0; i < k2.size(); ++i) map[k2[i]] = k1[i];
  int next = g1.n();
  for (Vertex v = 0; v < g2.n(); ++v)
    if (map[v] < 0) map[v] = next++;
  GraphBuilder b(next);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    if (!b.has_edge(map[u], map[v])) b.add_edge(map[u], map[v]);
  Graph g = b.build();
  ClassReport r = check_class(g);
  if (r.c == Verdict::in) return {g, std::nullopt};
  return {std::nullopt, r.witness};
}

}  // namespace talpha

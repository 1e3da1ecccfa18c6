// Brute-force reference implementations used only by the tests. Everything
// here works straight from the definitions over vertex subsets, so it is
// slow and only meant for small graphs.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "talpha/graph.hpp"

namespace oracle {

using talpha::Graph;
using talpha::Rational;
using talpha::Vertex;
using talpha::VertexSet;
using Mask = std::uint64_t;

inline VertexSet from_mask(int n, Mask m) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if ((m >> v) & 1U) s.insert(v);
  return s;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

struct AdjMasks {
  std::vector<Mask> adj;
  explicit AdjMasks(const Graph& g) : adj(static_cast<std::size_t>(g.n()), 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }
  int deg_in(Vertex v, Mask s) const { return std::popcount(adj[v] & s); }
  bool connected(Mask s) const {
    if (!s) return true;
    Mask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }
  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s) {
      Mask seen = s & (~s + 1), frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= s & ~seen;
        seen |= next;
        frontier = next;
      }
      out.push_back(seen);
      s &= ~seen;
    }
    return out;
  }
  bool clique(Mask s) const {
    for (Mask f = s; f; f &= f - 1) {
      const int v = std::countr_zero(f);
      if ((adj[v] & s) != (s & ~(Mask{1} << v))) return false;
    }
    return true;
  }
  bool stable(Mask s) const {
    for (Mask f = s; f; f &= f - 1)
      if (adj[std::countr_zero(f)] & s) return false;
    return true;
  }
  int edges_in(Mask s) const {
    int twice = 0;
    for (Mask f = s; f; f &= f - 1) twice += deg_in(std::countr_zero(f), s);
    return twice / 2;
  }
};

inline bool hole_mask(const AdjMasks& a, Mask s) {
  if (std::popcount(s) < 4) return false;
  for (Mask f = s; f; f &= f - 1)
    if (a.deg_in(std::countr_zero(f), s) != 2) return false;
  return a.connected(s);
}

inline std::vector<VertexSet> holes(const Graph& g) {
  AdjMasks a(g);
  std::vector<VertexSet> out;
  const Mask top = Mask{1} << g.n();
  for (Mask s = 0; s < top; ++s)
    if (hole_mask(a, s)) out.push_back(from_mask(g.n(), s));
  return out;
}

// Vertices of s with the given degree inside s.
inline Mask with_degree(const AdjMasks& a, Mask s, int d) {
  Mask out = 0;
  for (Mask f = s; f; f &= f - 1) {
    const int v = std::countr_zero(f);
    if (a.deg_in(v, s) == d) out |= Mask{1} << v;
  }
  return out;
}

inline bool theta_mask(const AdjMasks& a, Mask s) {
  Mask d3 = with_degree(a, s, 3), d2 = with_degree(a, s, 2);
  if (std::popcount(d3) != 2 || (d3 | d2) != s) return false;
  const int x = std::countr_zero(d3), y = 63 - std::countl_zero(d3);
  if ((a.adj[x] >> y) & 1U) return false;
  if (!a.connected(s)) return false;
  auto parts = a.components(s & ~d3);
  if (parts.size() != 3) return false;
  for (Mask p : parts)
    if (!(a.adj[x] & p) || !(a.adj[y] & p)) return false;
  return true;
}

// With the triangle edges removed: a tree whose only branch vertex is `centre`
// and whose leaves are exactly `leaves`.
inline bool spider(const AdjMasks& a, Mask s, Mask tri_edges_on, int centre, Mask leaves) {
  std::vector<Mask> adj = a.adj;
  for (Mask f = tri_edges_on; f; f &= f - 1) adj[std::countr_zero(f)] &= ~tri_edges_on;
  AdjMasks b = a;
  b.adj = adj;
  if (!b.connected(s) || b.edges_in(s) != std::popcount(s) - 1) return false;
  for (Mask f = s; f; f &= f - 1) {
    const int v = std::countr_zero(f);
    const int d = b.deg_in(v, s);
    const bool leaf = (leaves >> v) & 1U;
    if (v == centre ? d != 3 : leaf ? d != 1 : d != 2) return false;
  }
  return true;
}

inline bool pyramid_mask(const AdjMasks& a, Mask s) {
  Mask d3 = with_degree(a, s, 3), d2 = with_degree(a, s, 2);
  if (std::popcount(d3) != 4 || (d3 | d2) != s) return false;
  for (Mask f = d3; f; f &= f - 1) {
    const int apex = std::countr_zero(f);
    const Mask base = d3 & ~(Mask{1} << apex);
    if (!a.clique(base)) continue;
    if (std::popcount(a.adj[apex] & base) > 1) continue;
    if (spider(a, s, base, apex, base)) return true;
  }
  return false;
}

inline bool prism_mask(const AdjMasks& a, Mask s) {
  Mask d3 = with_degree(a, s, 3), d2 = with_degree(a, s, 2);
  if (std::popcount(d3) != 6 || (d3 | d2) != s) return false;
  const int first = std::countr_zero(d3);
  for (Mask f = d3 & ~(Mask{1} << first); f; f &= f - 1)
    for (Mask g2 = f & (f - 1); g2; g2 &= g2 - 1) {
      const Mask t1 = (Mask{1} << first) | (Mask{1} << std::countr_zero(f)) | (Mask{1} << std::countr_zero(g2));
      const Mask t2 = d3 & ~t1;
      if (!a.clique(t1) || !a.clique(t2)) continue;
      std::vector<Mask> adj = a.adj;
      for (Mask h = t1; h; h &= h - 1) adj[std::countr_zero(h)] &= ~t1;
      for (Mask h = t2; h; h &= h - 1) adj[std::countr_zero(h)] &= ~t2;
      AdjMasks b = a;
      b.adj = adj;
      auto parts = b.components(s);
      if (parts.size() != 3) continue;
      bool ok = true;
      for (Mask p : parts)
        if (std::popcount(p & t1) != 1 || std::popcount(p & t2) != 1 || b.edges_in(p) != std::popcount(p) - 1) ok = false;
      if (ok) return true;
    }
  return false;
}

struct WheelShape {
  int spokes;
  int adjacent_pairs;
  bool universal;
};

inline bool any_subset(const Graph& g, const std::function<bool(const AdjMasks&, Mask)>& pred) {
  AdjMasks a(g);
  const Mask top = Mask{1} << g.n();
  for (Mask s = 1; s < top; ++s)
    if (pred(a, s)) return true;
  return false;
}

inline bool has_wheel(const Graph& g, const std::function<bool(const WheelShape&)>& accept) {
  return any_subset(g, [&](const AdjMasks& a, Mask s) {
    for (Mask f = s; f; f &= f - 1) {
      const int w = std::countr_zero(f);
      const Mask h = s & ~(Mask{1} << w);
      if (!hole_mask(a, h)) continue;
      const Mask sp = a.adj[w] & h;
      WheelShape shape{std::popcount(sp), a.edges_in(sp), sp == h};
      if (shape.spokes >= 3 && accept(shape)) return true;
    }
    return false;
  });
}

inline bool is_bug(const WheelShape& s) { return s.spokes == 3 && s.adjacent_pairs == 1; }
inline bool is_twin(const WheelShape& s) { return s.spokes == 3 && s.adjacent_pairs == 2; }

inline bool has_c4(const Graph& g) {
  return any_subset(g, [](const AdjMasks& a, Mask s) { return std::popcount(s) == 4 && hole_mask(a, s); });
}
inline bool has_diamond(const Graph& g) {
  return any_subset(g, [](const AdjMasks& a, Mask s) { return std::popcount(s) == 4 && a.edges_in(s) == 5; });
}
inline bool has_theta(const Graph& g) { return any_subset(g, theta_mask); }
inline bool has_pyramid(const Graph& g) { return any_subset(g, pyramid_mask); }
inline bool has_prism(const Graph& g) { return any_subset(g, prism_mask); }
inline bool has_even_wheel(const Graph& g) {
  return has_wheel(g, [](const WheelShape& s) { return s.spokes % 2 == 0; });
}

inline bool in_class_c_star(const Graph& g) {
  return !has_c4(g) && !has_diamond(g) && !has_theta(g) && !has_prism(g) && !has_even_wheel(g);
}
inline bool in_class_c(const Graph& g) { return in_class_c_star(g) && !has_pyramid(g); }

// Hub(X) by definition.
inline VertexSet hubs(const Graph& g, const VertexSet& x) {
  AdjMasks a(g);
  const Mask xm = to_mask(x);
  VertexSet out(g.n());
  for (Mask h = xm; h; h = (h - 1) & xm) {
    if (!hole_mask(a, h)) continue;
    for (Mask f = xm & ~h; f; f &= f - 1) {
      const int w = std::countr_zero(f);
      const Mask sp = a.adj[w] & h;
      WheelShape shape{std::popcount(sp), a.edges_in(sp), sp == h};
      if (shape.spokes >= 3 && !is_bug(shape)) out.insert(w);
    }
  }
  return out;
}

inline int alpha(const Graph& g, const VertexSet& within) {
  AdjMasks a(g);
  const Mask w = to_mask(within);
  int best = 0;
  for (Mask s = w;; s = (s - 1) & w) {
    if (std::popcount(s) > best && a.stable(s)) best = std::popcount(s);
    if (!s) break;
  }
  return best;
}
inline int alpha(const Graph& g) { return alpha(g, g.all()); }

inline int omega(const Graph& g) {
  AdjMasks a(g);
  int best = 0;
  const Mask top = Mask{1} << g.n();
  for (Mask s = 0; s < top; ++s)
    if (std::popcount(s) > best && a.clique(s)) best = std::popcount(s);
  return best;
}

// Minimum number of cliques partitioning `within` (subset DP).
inline int chi_bar(const Graph& g, const VertexSet& within) {
  AdjMasks a(g);
  const Mask w = to_mask(within);
  std::vector<int> ids;
  for (Vertex v : within) ids.push_back(v);
  const int k = static_cast<int>(ids.size());
  auto expand = [&](std::uint32_t local) {
    Mask m = 0;
    for (int i = 0; i < k; ++i)
      if ((local >> i) & 1U) m |= Mask{1} << ids[i];
    return m;
  };
  (void)w;
  const std::uint32_t full = (k == 32) ? ~0U : ((1U << k) - 1);
  std::vector<std::uint8_t> is_clique(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t s = 0; s <= full; ++s) is_clique[s] = a.clique(expand(s));
  std::vector<int> best(static_cast<std::size_t>(full) + 1, 1 << 20);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s & ~low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if (is_clique[sub | low]) best[s] = std::min(best[s], best[s & ~(sub | low)] + 1);
      if (!sub) break;
    }
  }
  return best[full];
}
inline int chi_bar(const Graph& g) { return chi_bar(g, g.all()); }

// All clique cutsets of G (sets K, clique, with G \ K disconnected).
inline std::vector<VertexSet> clique_cutsets(const Graph& g) {
  AdjMasks a(g);
  std::vector<VertexSet> out;
  const Mask all = (g.n() == 64) ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  for (Mask k = 0; k <= all; ++k) {
    if (!a.clique(k)) continue;
    if (a.components(all & ~k).size() >= 2) out.push_back(from_mask(g.n(), k));
    if (k == all) break;
  }
  return out;
}

// Star cutsets C ⊆ N[v] with v ∈ C, G \ C disconnected.
inline bool has_star_cutset(const Graph& g) {
  AdjMasks a(g);
  const Mask all = (Mask{1} << g.n()) - 1;
  for (int v = 0; v < g.n(); ++v) {
    const Mask nb = a.adj[v];
    for (Mask sub = nb;; sub = (sub - 1) & nb) {
      const Mask c = sub | (Mask{1} << v);
      if (a.components(all & ~c).size() >= 2) return true;
      if (!sub) break;
    }
  }
  return false;
}

inline bool balances(const Graph& g, const std::vector<Rational>& w, const VertexSet& x, const Rational& c) {
  for (const auto& d : talpha::components(g, g.all() - x))
    if (talpha::total_weight(w, d) > c) return false;
  return true;
}

// Size of a smallest (w, c)-balanced separator.
inline int min_balanced_separator(const Graph& g, const std::vector<Rational>& w, const Rational& c) {
  const int n = g.n();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::function<bool(int, int)> rec = [&](int from, int depth) {
      if (depth == size) {
        VertexSet x(n);
        for (int v : pick) x.insert(v);
        return balances(g, w, x, c);
      }
      for (int v = from; v < n; ++v) {
        pick[depth] = v;
        if (rec(v + 1, depth + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return size;
  }
  return n;
}

inline Rational mwis_value(const Graph& g, const std::vector<Rational>& w) {
  AdjMasks a(g);
  Rational best = 0;
  const Mask top = Mask{1} << g.n();
  for (Mask s = 0; s < top; ++s) {
    if (!a.stable(s)) continue;
    Rational val = 0;
    for (Mask f = s; f; f &= f - 1) val += w[std::countr_zero(f)];
    if (val > best) best = val;
  }
  return best;
}

// Chordality by repeatedly removing simplicial vertices.
inline bool chordal(const AdjMasks& a, Mask s) {
  while (s) {
    bool removed = false;
    for (Mask f = s; f; f &= f - 1) {
      const int v = std::countr_zero(f);
      if (a.clique(a.adj[v] & s)) {
        s &= ~(Mask{1} << v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// ta by trying every set of fill edges: the best decomposition is a clique
// tree of some chordal supergraph, with bags its maximal cliques.
inline int tree_alpha(const Graph& g) {
  AdjMasks base(g);
  std::vector<std::pair<int, int>> non_edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
  const Mask all = (Mask{1} << g.n()) - 1;
  int best = g.n();
  const std::uint32_t top = 1U << non_edges.size();
  for (std::uint32_t fill = 0; fill < top; ++fill) {
    AdjMasks h = base;
    for (std::size_t i = 0; i < non_edges.size(); ++i)
      if ((fill >> i) & 1U) {
        auto [u, v] = non_edges[i];
        h.adj[u] |= Mask{1} << v;
        h.adj[v] |= Mask{1} << u;
      }
    if (!chordal(h, all)) continue;
    // Maximal cliques of a chordal graph are among the N[v] ∩ later sets;
    // checking every clique of h is simpler and fine at this size.
    int worst = 0;
    for (Mask k = 1; k <= all; ++k) {
      if (!h.clique(k)) continue;
      int a = 0;
      for (Mask s = k;; s = (s - 1) & k) {
        if (std::popcount(s) > a && base.stable(s)) a = std::popcount(s);
        if (!s) break;
      }
      worst = std::max(worst, a);
    }
    best = std::min(best, worst);
  }
  return best;
}

// Seeded generators for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<talpha::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Adds edges in random order, keeping each only if `keep` still holds.
inline Graph random_filtered(int n, double p, Rng& rng, const std::function<bool(const Graph&)>& keep) {
  std::vector<talpha::Edge> pairs, edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(static_cast<int>(i))]);
  for (const auto& e : pairs) {
    if (!rng.chance(p)) continue;
    edges.push_back(e);
    if (!keep(Graph(n, edges))) edges.pop_back();
  }
  return Graph(n, edges);
}

// Random positive rational weights normalised to total 1.
inline std::vector<Rational> random_weights(int n, Rng& rng, int max_units = 5) {
  std::vector<Rational> w(static_cast<std::size_t>(n));
  Rational total = 0;
  for (auto& x : w) {
    x = rng.below(max_units) + 1;
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline Graph cycle(int n) {
  std::vector<talpha::Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}
inline Graph path(int n) {
  std::vector<talpha::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}
inline Graph complete(int n) {
  std::vector<talpha::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}
// Cycle 0..k-1 plus a hub k adjacent to the listed (0-based) rim vertices.
inline Graph wheel(int k, std::initializer_list<int> spokes) {
  std::vector<talpha::Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  for (int s : spokes) e.emplace_back(s, k);
  return Graph(k + 1, e);
}

}  // namespace oracle

#include "talpha/cover.hpp"

#include <algorithm>
#include <functional>

#include "talpha/structures.hpp"

namespace talpha {

namespace {

struct GreedyClique {
  VertexSet members;
  VertexSet common;  // vertices complete to all members
};

std::vector<GreedyClique> greedy_cover(const Graph& g, const VertexSet& within) {
  std::vector<GreedyClique> parts;
  for (Vertex v : within) {
    bool placed = false;
    for (auto& c : parts)
      if (c.common.contains(v)) {
        c.members.insert(v);
        c.common &= g.neighbors(v);
        placed = true;
        break;
      }
    if (!placed) parts.push_back({VertexSet(g.n(), {v}), g.neighbors(v) & within});
  }
  return parts;
}

class AlphaSearch {
 public:
  explicit AlphaSearch(const Graph& g) : g_(g) {}

  int run(const VertexSet& p) {
    best_ = 0;
    rec(p, 0);
    return best_;
  }

 private:
  void rec(VertexSet p, int cur) {
    // Degree <= 1 vertices belong to some maximum stable set: take them.
    while (true) {
      if (p.empty()) {
        best_ = std::max(best_, cur);
        return;
      }
      Vertex pick = -1;
      int pick_deg = 1 << 30;
      for (Vertex v : p) {
        const int d = g_.neighbors(v).intersection_size(p);
        if (d < pick_deg) {
          pick_deg = d;
          pick = v;
          if (d <= 1) break;
        }
      }
      if (pick_deg <= 1) {
        p -= g_.closed_neighbors(pick);
        ++cur;
        continue;
      }
      if (cur + static_cast<int>(greedy_cover(g_, p).size()) <= best_) return;
      rec(p - g_.closed_neighbors(pick), cur + 1);
      p.erase(pick);
      if (cur + p.size() <= best_) return;
    }
  }

  const Graph& g_;
  int best_ = 0;
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const VertexSet& within) : g_(g) {
    order_ = within.to_vector();
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.neighbors(a).intersection_size(within) < g.neighbors(b).intersection_size(within);
    });
    lower_ = independence_number(g, within);
    for (const auto& c : greedy_cover(g, within)) best_.push_back(c.members);
  }

  std::vector<VertexSet> run() {
    if (static_cast<int>(best_.size()) > lower_) rec(0);
    return best_;
  }
  int lower() const { return lower_; }

 private:
  bool rec(std::size_t idx) {
    if (current_.size() >= best_.size()) return false;
    if (idx == order_.size()) {
      best_ = current_;
      return static_cast<int>(best_.size()) == lower_;
    }
    const Vertex v = order_[idx];
    for (std::size_t i = 0; i < current_.size(); ++i) {
      if (!current_[i].is_subset_of(g_.neighbors(v))) continue;
      current_[i].insert(v);
      const bool done = rec(idx + 1);
      current_[i].erase(v);
      if (done) return true;
    }
    if (current_.size() + 1 < best_.size()) {
      current_.push_back(VertexSet(g_.n(), {v}));
      const bool done = rec(idx + 1);
      current_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  int lower_ = 0;
  std::vector<VertexSet> best_;
  std::vector<VertexSet> current_;
};

}  // namespace

int independence_number(const Graph& g, const VertexSet& within) {
  return AlphaSearch(g).run(within);
}

VertexSet maximum_stable_set(const Graph& g, const VertexSet& within) {
  AlphaSearch search(g);
  int need = search.run(within);
  VertexSet chosen(g.n()), rest = within;
  for (Vertex v : within) {
    if (need == 0) break;
    if (!rest.contains(v)) continue;
    VertexSet after = rest - g.closed_neighbors(v);
    if (1 + search.run(after) == need) {
      chosen.insert(v);
      rest = std::move(after);
      --need;
    } else {
      rest.erase(v);
    }
  }
  return chosen;
}

int clique_number(const Graph& g, const VertexSet& within) {
  InducedSubgraph sub = g.induced(within);
  return independence_number(sub.graph.complement());
}

bool is_clique_cover(const Graph& g, const std::vector<VertexSet>& parts, const VertexSet& covered) {
  VertexSet seen(g.n());
  for (const auto& p : parts) {
    if (p.empty() || p.intersects(seen) || !g.is_clique(p)) return false;
    seen |= p;
  }
  return seen == covered;
}

std::vector<VertexSet> greedy_clique_cover(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  for (auto& c : greedy_cover(g, within)) out.push_back(std::move(c.members));
  return out;
}

CliqueCover minimum_clique_cover(const Graph& g, const VertexSet& within) {
  CoverSearch search(g, within);
  CliqueCover out;
  out.cliques = search.run();
  out.alpha_lower_bound = search.lower();
  sort_canonical(out.cliques);
  return out;
}

Invariants exact_invariants(const Graph& g, const CoverGuards& guards) {
  if (g.n() > guards.alpha_omega) throw TooLarge("alpha/omega", g.n(), guards.alpha_omega);
  if (g.n() > guards.chi_bar) throw TooLarge("clique cover number", g.n(), guards.chi_bar);
  Invariants inv;
  inv.alpha = independence_number(g);
  inv.omega = clique_number(g, g.all());
  inv.chi_bar = minimum_clique_cover(g, g.all()).size();
  return inv;
}

CliqueCover clique_cover_c4free(const Graph& g, const VertexSet& within) {
  InducedSubgraph sub = g.induced(within);
  if (auto c4 = find_structure(sub.graph, StructureKind::c4); c4.found()) {
    Witness w = *c4.witness;
    for (Vertex& v : w.anchors) v = sub.to_parent[v];
    throw NotC4Free(std::move(w));
  }
  const std::vector<Vertex> s = maximum_stable_set(g, within).to_vector();
  const int a = static_cast<int>(s.size());
  // Class i < a: private neighbours of s_i plus s_i. Class (i, j): vertices
  // whose first two stable neighbours are s_i, s_j.
  std::vector<VertexSet> single(static_cast<std::size_t>(a), VertexSet(g.n()));
  std::vector<std::vector<VertexSet>> pair(static_cast<std::size_t>(a),
                                           std::vector<VertexSet>(static_cast<std::size_t>(a), VertexSet(g.n())));
  for (int i = 0; i < a; ++i) single[i].insert(s[i]);
  for (Vertex v : within) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    std::vector<int> hits;
    for (int i = 0; i < a; ++i)
      if (g.adjacent(v, s[i])) hits.push_back(i);
    if (hits.empty()) throw InternalError("stable set is not maximal");
    if (hits.size() == 1)
      single[hits[0]].insert(v);
    else
      pair[hits[0]][hits[1]].insert(v);
  }
  CliqueCover out;
  out.alpha_lower_bound = a;
  for (int i = 0; i < a; ++i) {
    out.cliques.push_back(single[i]);
    for (int j = i + 1; j < a; ++j)
      if (!pair[i][j].empty()) out.cliques.push_back(pair[i][j]);
  }
  if (!is_clique_cover(g, out.cliques, within)) throw InternalError("stable-set cover is not a clique partition");
  sort_canonical(out.cliques);
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    Vertex pivot = -1;
    int most = -1;
    for (Vertex u : p | x) {
      const int c = g.neighbors(u).intersection_size(p);
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (Vertex v : p - g.neighbors(pivot)) {
      VertexSet r2 = r;
      r2.insert(v);
      bk(r2, p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    }
  };
  if (!within.empty()) bk(VertexSet(g.n()), within, VertexSet(g.n()));
  sort_canonical(out);
  return out;
}

CoverBound cover_bound(const Graph& g, const VertexSet& s, int guard) {
  CoverBound b;
  if (s.empty()) return b;
  if (s.size() <= guard) {
    auto c = minimum_clique_cover(g, s);
    b.lower = b.upper = c.size();
    b.cover = std::move(c.cliques);
    return b;
  }
  b.lower = independence_number(g, s);
  b.cover = greedy_clique_cover(g, s);
  try {
    auto w = clique_cover_c4free(g, s);
    if (w.size() < static_cast<int>(b.cover.size())) b.cover = std::move(w.cliques);
  } catch (const NotC4Free&) {
  }
  b.upper = static_cast<int>(b.cover.size());
  return b;
}

}  // namespace talpha

#include "talpha/witness.hpp"

#include <algorithm>
#include <set>

namespace talpha {

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::c4: return "c4";
    case StructureKind::diamond: return "diamond";
    case StructureKind::theta: return "theta";
    case StructureKind::pyramid: return "pyramid";
    case StructureKind::prism: return "prism";
    case StructureKind::wheel: return "wheel";
  }
  return "unknown";
}

std::optional<StructureKind> parse_structure_kind(const std::string& name) {
  for (auto k : {StructureKind::c4, StructureKind::diamond, StructureKind::theta, StructureKind::pyramid,
                 StructureKind::prism, StructureKind::wheel})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

VertexSet Witness::vertices(int n) const {
  VertexSet s(n);
  for (Vertex v : anchors) s.insert(v);
  for (const auto& p : paths)
    for (Vertex v : p) s.insert(v);
  return s;
}

namespace {

bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<Vertex> seen;
  for (Vertex v : vs)
    if (v < 0 || v >= g.n() || !seen.insert(v).second) return false;
  return true;
}

int edges_within(const Graph& g, const VertexSet& s) {
  int twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

// P_i followed by P_j walked backwards, dropping P_j's endpoint shared with P_i.
std::vector<Vertex> join_at_start(const std::vector<Vertex>& pi, const std::vector<Vertex>& pj) {
  std::vector<Vertex> cycle = pi;
  for (std::size_t k = pj.size(); k-- > 1;) cycle.push_back(pj[k]);
  return cycle;
}

std::optional<std::string> verify_three_paths(const Graph& g, const Witness& w) {
  if (w.paths.size() != 3) return "expected three paths";
  for (const auto& p : w.paths)
    if (!is_induced_path(g, p)) return "a path is not an induced path";
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto& pi = w.paths[i];
      const auto& pj = w.paths[j];
      std::vector<Vertex> cycle;
      if (w.kind == StructureKind::theta) {
        // Both run a -> b; the far end is shared too.
        cycle = pi;
        for (std::size_t k = pj.size() - 1; k-- > 1;) cycle.push_back(pj[k]);
      } else if (w.kind == StructureKind::pyramid) {
        cycle = join_at_start(pi, pj);
      } else {
        cycle = pi;
        for (std::size_t k = pj.size(); k-- > 0;) cycle.push_back(pj[k]);
      }
      if (!is_hole(g, cycle))
        return "paths " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not induce a hole";
    }
  return std::nullopt;
}

}  // namespace

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4 || !distinct_in_range(g, cycle)) return false;
  VertexSet s = VertexSet::of(g.n(), cycle);
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
    if ((g.neighbors(cycle[i]) & s).size() != 2) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& path) {
  const std::size_t k = path.size();
  if (k == 0 || !distinct_in_range(g, path)) return false;
  VertexSet s = VertexSet::of(g.n(), path);
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 < k && !g.adjacent(path[i], path[i + 1])) return false;
    const int expected = k == 1 ? 0 : (i == 0 || i + 1 == k) ? 1 : 2;
    if ((g.neighbors(path[i]) & s).size() != expected) return false;
  }
  return true;
}

std::vector<Vertex> cyclic_order(const Graph& g, const VertexSet& hole) {
  std::vector<Vertex> order;
  Vertex start = hole.first();
  if (start < 0) return order;
  Vertex prev = -1, cur = start;
  do {
    order.push_back(cur);
    VertexSet nb = g.neighbors(cur) & hole;
    if (prev >= 0) nb.erase(prev);
    Vertex nxt = nb.first();
    prev = cur;
    cur = nxt;
  } while (cur >= 0 && cur != start && order.size() <= static_cast<std::size_t>(hole.size()));
  return order;
}

WheelFlags classify_wheel(const Graph& g, const VertexSet& hole, Vertex hub) {
  WheelFlags f;
  VertexSet spokes = g.neighbors(hub) & hole;
  f.spokes = spokes.size();
  const int adjacent_pairs = edges_within(g, spokes);
  f.even = f.spokes % 2 == 0;
  f.bug = f.spokes == 3 && adjacent_pairs == 1;
  f.twin = f.spokes == 3 && adjacent_pairs == 2;
  f.universal = spokes == hole;
  f.line = f.spokes == 4 && adjacent_pairs == 2 &&
           std::all_of(spokes.begin(), spokes.end(),
                       [&](Vertex v) { return (g.neighbors(v) & spokes).size() == 1; });
  f.proper = !f.bug && !f.twin && !f.universal;
  return f;
}

std::optional<std::string> verify_witness(const Graph& g, const Witness& w) {
  switch (w.kind) {
    case StructureKind::c4:
      if (w.anchors.size() != 4 || !is_hole(g, w.anchors)) return "not an induced 4-cycle";
      return std::nullopt;
    case StructureKind::diamond: {
      if (w.anchors.size() != 4 || !distinct_in_range(g, w.anchors)) return "diamond needs 4 distinct vertices";
      const Vertex u = w.anchors[0], v = w.anchors[1], x = w.anchors[2], y = w.anchors[3];
      if (!g.adjacent(u, v)) return "spine vertices not adjacent";
      for (Vertex t : {x, y})
        if (!g.adjacent(t, u) || !g.adjacent(t, v)) return "tip not adjacent to both spine vertices";
      if (g.adjacent(x, y)) return "tips adjacent";
      return std::nullopt;
    }
    case StructureKind::theta: {
      if (w.anchors.size() != 2) return "theta needs ends a, b";
      const Vertex a = w.anchors[0], b = w.anchors[1];
      if (g.adjacent(a, b)) return "theta ends adjacent";
      for (const auto& p : w.paths)
        if (p.size() < 3 || p.front() != a || p.back() != b) return "theta path does not run a -> b";
      return verify_three_paths(g, w);
    }
    case StructureKind::pyramid: {
      if (w.anchors.size() != 4 || !distinct_in_range(g, w.anchors)) return "pyramid needs apex and base";
      const Vertex a = w.anchors[0];
      VertexSet base = VertexSet::of(g.n(), std::vector<Vertex>(w.anchors.begin() + 1, w.anchors.end()));
      if (!g.is_clique(base)) return "pyramid base is not a triangle";
      if (w.paths.size() != 3) return "expected three paths";
      int short_paths = 0;
      for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[i];
        if (p.size() < 2 || p.front() != a || p.back() != w.anchors[i + 1]) return "pyramid path does not run apex -> b_i";
        if (p.size() == 2) ++short_paths;
      }
      if (short_paths > 1) return "more than one pyramid path of length 1";
      return verify_three_paths(g, w);
    }
    case StructureKind::prism: {
      if (w.anchors.size() != 6 || !distinct_in_range(g, w.anchors)) return "prism needs two triangles";
      VertexSet ta = VertexSet::of(g.n(), std::vector<Vertex>(w.anchors.begin(), w.anchors.begin() + 3));
      VertexSet tb = VertexSet::of(g.n(), std::vector<Vertex>(w.anchors.begin() + 3, w.anchors.end()));
      if (!g.is_clique(ta) || !g.is_clique(tb)) return "prism triangles are not cliques";
      if (w.paths.size() != 3) return "expected three paths";
      for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[i];
        if (p.size() < 2 || p.front() != w.anchors[i] || p.back() != w.anchors[i + 3])
          return "prism path does not run a_i -> b_i";
      }
      return verify_three_paths(g, w);
    }
    case StructureKind::wheel: {
      if (w.anchors.size() != 1 || w.paths.size() != 1) return "wheel needs a hub and a hole";
      const Vertex hub = w.anchors[0];
      if (!is_hole(g, w.paths[0])) return "wheel rim is not a hole";
      VertexSet hole = VertexSet::of(g.n(), w.paths[0]);
      if (hub < 0 || hub >= g.n() || hole.contains(hub)) return "hub lies on the hole";
      WheelFlags f = classify_wheel(g, hole, hub);
      if (f.spokes < 3) return "hub has fewer than three neighbors on the hole";
      if (f.spokes != w.flags.spokes || f.even != w.flags.even || f.bug != w.flags.bug || f.twin != w.flags.twin ||
          f.universal != w.flags.universal || f.line != w.flags.line || f.proper != w.flags.proper)
        return "wheel classification flags do not match";
      return std::nullopt;
    }
  }
  return "unknown kind";
}

Witness checked(const Graph& g, Witness w) {
  if (auto why = verify_witness(g, w)) throw InternalError("witness for " + to_string(w.kind) + " failed re-verification: " + *why);
  return w;
}

}  // namespace talpha

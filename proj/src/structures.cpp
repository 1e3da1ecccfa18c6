#include "talpha/structures.hpp"

#include <algorithm>
#include <array>

namespace talpha {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::in: return "in";
    case Verdict::out: return "out";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const Budget& b) {
    if (b.time) end_ = Clock::now() + *b.time;
  }
  bool passed() {
    if (!end_) return false;
    if (++calls_ % 256 != 0) return expired_;
    expired_ = Clock::now() >= *end_;
    return expired_;
  }

 private:
  std::optional<Clock::time_point> end_;
  unsigned calls_ = 0;
  bool expired_ = false;
};

class HoleWalker {
 public:
  using Visitor = std::function<bool(const std::vector<Vertex>&, const VertexSet&)>;

  HoleWalker(const Graph& g, const VertexSet& within, const Budget& budget, const Visitor& visit)
      : g_(g), within_(within), budget_(budget), deadline_(budget), visit_(visit) {}

  HoleScan run() {
    for (Vertex s : within_) {
      allowed_ = within_;
      for (Vertex u = 0; u <= s; ++u) allowed_.erase(u);
      near_start_ = g_.neighbors(s) & allowed_;
      for (Vertex x1 : near_start_) {
        path_ = {s, x1};
        if (!extend(g_.set({s, x1}))) return scan_;
      }
    }
    return scan_;
  }

 private:
  // path_ = s, x1, ..., xk; forbidden = path ∪ N(x1..x_{k-1}).
  bool extend(const VertexSet& forbidden) {
    if (deadline_.passed()) {
      scan_.completed = false;
      return false;
    }
    const Vertex tip = path_.back();
    const std::size_t k = path_.size() - 1;
    const VertexSet next = (g_.neighbors(tip) & allowed_) - forbidden;
    for (Vertex y : next) {
      if (near_start_.contains(y)) {
        if (k < 2 || y < path_[1]) continue;
        path_.push_back(y);
        if (++scan_.holes > budget_.max_holes) {
          scan_.completed = false;
          return false;
        }
        const bool go_on = visit_(path_, VertexSet::of(g_.n(), path_));
        path_.pop_back();
        if (!go_on) {
          scan_.stopped = true;
          return false;
        }
        continue;
      }
      VertexSet f = forbidden | g_.neighbors(tip);
      f.insert(y);
      // Prune when no admissible closing vertex is reachable any more.
      VertexSet live = near_start_ - f - VertexSet::prefix(g_.n(), path_[1]);
      if (live.empty()) continue;
      if (!g_.neighbors(y).intersects(live)) {
        VertexSet open = allowed_ - f - near_start_;
        open.insert(y);
        if (!g_.neighbors(component_of(g_, open, y)).intersects(live)) continue;
      }
      path_.push_back(y);
      const bool ok = extend(f);
      path_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  const Graph& g_;
  const VertexSet& within_;
  const Budget& budget_;
  Deadline deadline_;
  const Visitor& visit_;
  VertexSet allowed_;
  VertexSet near_start_;
  std::vector<Vertex> path_;
  HoleScan scan_;
};

// Per-hole view: for each vertex outside the hole, its neighbours on it.
struct HoleView {
  const Graph& g;
  const std::vector<Vertex>& cyc;
  VertexSet hole;
  std::vector<VertexSet> on_hole;
  std::vector<int> pos;

  HoleView(const Graph& graph, const std::vector<Vertex>& cycle, const VertexSet& h)
      : g(graph), cyc(cycle), hole(h), pos(static_cast<std::size_t>(graph.n()), -1) {
    on_hole.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex x = 0; x < g.n(); ++x) on_hole.push_back(hole.contains(x) ? VertexSet(g.n()) : g.neighbors(x) & hole);
    for (std::size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = static_cast<int>(i);
  }

  int len() const { return static_cast<int>(cyc.size()); }
  Vertex at(int i) const { return cyc[((i % len()) + len()) % len()]; }

  // Walk along the hole from a to b (inclusive) in direction dir (+1 / -1).
  std::vector<Vertex> arc(Vertex a, Vertex b, int dir) const {
    std::vector<Vertex> out;
    for (int i = pos[a];; i += dir) {
      out.push_back(at(i));
      if (at(i) == b) break;
    }
    return out;
  }

  // Vertices outside the hole whose attachment to it lies within `allowed`.
  VertexSet attached_within(const VertexSet& allowed) const {
    VertexSet out(g.n());
    for (Vertex x = 0; x < g.n(); ++x)
      if (!hole.contains(x) && on_hole[x].is_subset_of(allowed)) out.insert(x);
    return out;
  }
};

std::optional<Witness> theta_at(const HoleView& h) {
  for (int i = 0; i < h.len(); ++i)
    for (int j = i + 2; j < h.len(); ++j) {
      if (i == 0 && j == h.len() - 1) continue;
      const Vertex a = h.at(i), b = h.at(j);
      VertexSet r = h.attached_within(h.g.set({a, b}));
      if (!h.g.neighbors(a).intersects(r) || !h.g.neighbors(b).intersects(r)) continue;
      auto p3 = shortest_path(h.g, a, b, r);
      if (p3.empty()) continue;
      Witness w;
      w.kind = StructureKind::theta;
      w.anchors = {a, b};
      w.paths = {h.arc(a, b, +1), h.arc(a, b, -1), p3};
      return w;
    }
  return std::nullopt;
}

std::optional<Witness> pyramid_at(const HoleView& h) {
  const Graph& g = h.g;
  for (int i = 0; i < h.len(); ++i) {
    const Vertex b1 = h.at(i), b2 = h.at(i + 1);
    VertexSet tops = (g.neighbors(b1) & g.neighbors(b2)) - h.hole;
    for (Vertex b3 : tops) {
      VertexSet extra = h.on_hole[b3];
      extra.erase(b1);
      extra.erase(b2);
      if (extra.size() > 1) continue;
      auto make = [&](Vertex apex, std::vector<Vertex> p3) {
        Witness w;
        w.kind = StructureKind::pyramid;
        w.anchors = {apex, b1, b2, b3};
        // b1 = at(i), b2 = at(i+1): from the apex, b1 is reached going
        // forward (the walk ends at i) and b2 going backward.
        w.paths = {h.arc(apex, b1, +1), h.arc(apex, b2, -1), std::move(p3)};
        return w;
      };
      if (extra.size() == 1) {
        const Vertex a = extra.first();
        if (g.adjacent(a, b1) || g.adjacent(a, b2)) continue;
        return make(a, {a, b3});
      }
      for (int j = i + 2; j < i + h.len(); ++j) {
        const Vertex a = h.at(j);
        VertexSet r = h.attached_within(g.set({a}));
        r.erase(b3);
        auto p3 = shortest_path(g, a, b3, r);
        if (p3.empty()) continue;
        return make(a, std::move(p3));
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> prism_at(const HoleView& h) {
  const Graph& g = h.g;
  const int k = h.len();
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if ((j + 1) % k == i) continue;
      const Vertex a1 = h.at(i + 1), a2 = h.at(i), b1 = h.at(j), b2 = h.at(j + 1);
      VertexSet pa = g.set({a1, a2}), pb = g.set({b1, b2});
      for (Vertex a3 : (g.neighbors(a1) & g.neighbors(a2)) - h.hole) {
        if (h.on_hole[a3] != pa) continue;
        for (Vertex b3 : (g.neighbors(b1) & g.neighbors(b2)) - h.hole) {
          if (h.on_hole[b3] != pb) continue;
          std::vector<Vertex> p3;
          if (g.adjacent(a3, b3)) {
            p3 = {a3, b3};
          } else {
            VertexSet r = h.attached_within(g.empty_set());
            r.erase(a3);
            r.erase(b3);
            p3 = shortest_path(g, a3, b3, r);
            if (p3.empty()) continue;
          }
          Witness w;
          w.kind = StructureKind::prism;
          w.anchors = {a1, a2, a3, b1, b2, b3};
          w.paths = {h.arc(a1, b1, +1), h.arc(a2, b2, -1), std::move(p3)};
          return w;
        }
      }
    }
  return std::nullopt;
}

bool passes(const WheelFlags& f, WheelFilter filter) {
  switch (filter) {
    case WheelFilter::any: return true;
    case WheelFilter::even: return f.even;
    case WheelFilter::non_bug: return !f.bug;
    case WheelFilter::proper: return f.proper;
  }
  return false;
}

Witness wheel_witness(const HoleView& h, Vertex hub, const WheelFlags& f) {
  Witness w;
  w.kind = StructureKind::wheel;
  w.anchors = {hub};
  w.paths = {h.cyc};
  w.flags = f;
  return w;
}

std::optional<Witness> wheel_at(const HoleView& h, WheelFilter filter) {
  for (Vertex x = 0; x < h.g.n(); ++x) {
    if (h.hole.contains(x) || h.on_hole[x].size() < 3) continue;
    WheelFlags f = classify_wheel(h.g, h.hole, x);
    if (passes(f, filter)) return wheel_witness(h, x, f);
  }
  return std::nullopt;
}

std::optional<Witness> find_c4(const Graph& g) {
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex c = a + 1; c < g.n(); ++c) {
      if (g.adjacent(a, c)) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(c);
      for (Vertex x : common)
        for (Vertex y = common.next(x); y >= 0; y = common.next(y))
          if (!g.adjacent(x, y)) return Witness{StructureKind::c4, {a, x, c, y}, {}, {}};
    }
  return std::nullopt;
}

std::optional<Witness> find_diamond(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    for (Vertex x : common)
      for (Vertex y = common.next(x); y >= 0; y = common.next(y))
        if (!g.adjacent(x, y)) return Witness{StructureKind::diamond, {u, v, x, y}, {}, {}};
  }
  return std::nullopt;
}

Detection from_scan(const HoleScan& scan, std::optional<Witness> w, const Graph& g) {
  Detection d;
  if (w) {
    d.status = SearchStatus::found;
    d.witness = checked(g, std::move(*w));
  } else {
    d.status = scan.completed ? SearchStatus::absent : SearchStatus::unknown;
  }
  return d;
}

// Sweep holes and run `probe` on each until it yields a witness.
Detection sweep(const Graph& g, const Budget& budget, const std::function<std::optional<Witness>(const HoleView&)>& probe) {
  std::optional<Witness> found;
  HoleScan scan = for_each_hole(g, g.all(), budget, [&](const std::vector<Vertex>& cyc, const VertexSet& hole) {
    HoleView view(g, cyc, hole);
    found = probe(view);
    return !found;
  });
  return from_scan(scan, std::move(found), g);
}

}  // namespace

HoleScan for_each_hole(const Graph& g, const VertexSet& within, const Budget& budget,
                       const std::function<bool(const std::vector<Vertex>&, const VertexSet&)>& visit) {
  HoleWalker walker(g, within, budget, visit);
  return walker.run();
}

HoleList enumerate_holes(const Graph& g, const Budget& budget) {
  HoleList out;
  HoleScan scan = for_each_hole(g, g.all(), budget, [&](const std::vector<Vertex>&, const VertexSet& hole) {
    out.holes.push_back(hole);
    return true;
  });
  out.truncated = !scan.completed;
  return out;
}

Detection find_structure(const Graph& g, StructureKind kind, const Budget& budget) {
  switch (kind) {
    case StructureKind::c4: {
      auto w = find_c4(g);
      return w ? Detection{SearchStatus::found, checked(g, *w)} : Detection{SearchStatus::absent, std::nullopt};
    }
    case StructureKind::diamond: {
      auto w = find_diamond(g);
      return w ? Detection{SearchStatus::found, checked(g, *w)} : Detection{SearchStatus::absent, std::nullopt};
    }
    case StructureKind::theta: return sweep(g, budget, theta_at);
    case StructureKind::pyramid: return sweep(g, budget, pyramid_at);
    case StructureKind::prism: return sweep(g, budget, prism_at);
    case StructureKind::wheel: return find_wheel(g, WheelFilter::any, budget);
  }
  throw InvalidInput("unknown structure kind");
}

Detection find_wheel(const Graph& g, WheelFilter filter, const Budget& budget) {
  return sweep(g, budget, [filter](const HoleView& h) { return wheel_at(h, filter); });
}

Detection find_3pc_or_wheel(const Graph& g, const Budget& budget) {
  return sweep(g, budget, [](const HoleView& h) -> std::optional<Witness> {
    if (auto w = theta_at(h)) return w;
    if (auto w = pyramid_at(h)) return w;
    if (auto w = prism_at(h)) return w;
    return wheel_at(h, WheelFilter::any);
  });
}

HubSet hub_set(const Graph& g, const VertexSet& x, const Budget& budget) {
  HubSet out{x, g.empty_set(), {}, g.empty_set()};
  InducedSubgraph sub = g.induced(x);
  const Graph& h = sub.graph;
  HoleScan scan = for_each_hole(h, h.all(), budget, [&](const std::vector<Vertex>& cyc, const VertexSet& hole) {
    HoleView view(h, cyc, hole);
    for (Vertex v = 0; v < h.n(); ++v) {
      const Vertex host = sub.to_parent[v];
      if (hole.contains(v) || view.on_hole[v].size() < 3 || out.hubs.contains(host)) continue;
      WheelFlags f = classify_wheel(h, hole, v);
      if (f.bug) continue;
      Witness w = wheel_witness(view, v, f);
      w.anchors[0] = host;
      for (Vertex& u : w.paths[0]) u = sub.to_parent[u];
      out.hubs.insert(host);
      out.witnesses.emplace(host, checked(g, std::move(w)));
    }
    return out.hubs != x;
  });
  if (!scan.completed) out.undetermined = x - out.hubs;
  return out;
}

ClassReport check_class(const Graph& g, const Budget& budget) {
  ClassReport r;
  auto direct = find_c4(g);
  if (!direct) direct = find_diamond(g);
  if (direct) {
    r.c = r.c_star = Verdict::out;
    r.witness = r.c_star_witness = checked(g, *direct);
    return r;
  }
  HoleScan scan = for_each_hole(g, g.all(), budget, [&](const std::vector<Vertex>& cyc, const VertexSet& hole) {
    HoleView view(g, cyc, hole);
    std::optional<Witness> w = theta_at(view);
    if (!w) w = prism_at(view);
    if (!w) w = wheel_at(view, WheelFilter::even);
    if (w) {
      r.c_star_witness = checked(g, *w);
      if (!r.witness) r.witness = r.c_star_witness;
      return false;
    }
    if (!r.witness)
      if (auto p = pyramid_at(view)) r.witness = checked(g, *p);
    return true;
  });
  if (r.c_star_witness) {
    r.c = r.c_star = Verdict::out;
  } else {
    r.c_star = scan.completed ? Verdict::in : Verdict::unknown;
    r.c = r.witness ? Verdict::out : r.c_star;
  }
  return r;
}

namespace {

bool connector_ok(const Graph& g, const VertexSet& h, const std::array<Vertex, 3>& xs) {
  if (h.empty() || !is_connected(g, h)) return false;
  for (Vertex x : xs)
    if (!g.neighbors(x).intersects(h)) return false;
  return true;
}

std::vector<Vertex> with_end(std::vector<Vertex> p, Vertex x) {
  p.push_back(x);
  return p;
}

// Orders an induced path's vertices from one end; empty if h is not a path.
std::vector<Vertex> path_order(const Graph& g, const VertexSet& h) {
  if (h.size() == 1) return {h.first()};
  Vertex end = -1;
  for (Vertex v : h) {
    const int d = (g.neighbors(v) & h).size();
    if (d > 2) return {};
    if (d == 1 && end < 0) end = v;
  }
  if (end < 0) return {};
  std::vector<Vertex> order{end};
  Vertex prev = -1, cur = end;
  while (true) {
    VertexSet nb = g.neighbors(cur) & h;
    if (prev >= 0) nb.erase(prev);
    if (nb.empty()) break;
    prev = cur;
    cur = nb.first();
    order.push_back(cur);
  }
  if (static_cast<int>(order.size()) != h.size() || !is_induced_path(g, order)) return {};
  return order;
}

}  // namespace

std::optional<std::string> verify_connector(const Graph& g, const std::array<Vertex, 3>& xs, const ConnectorClass& c) {
  using O = ConnectorClass::Outcome;
  const VertexSet xset = g.set({xs[0], xs[1], xs[2]});
  if (c.h.intersects(xset) || !connector_ok(g, c.h, xs)) return "H is not a connected attachment of all three vertices";
  if (c.outcome == O::path_or_hole) {
    if (c.roles.size() != 3 || c.paths.size() != 1) return "malformed outcome (i)";
    const auto& p = c.paths[0];
    const Vertex xi = c.roles[0], xj = c.roles[1], xk = c.roles[2];
    if (p.size() < 3 || p.front() != xi || p.back() != xj) return "P does not run x_i -> x_j";
    const bool as_path = is_induced_path(g, p);
    const bool as_hole = g.adjacent(xi, xj) && is_hole(g, p);
    if (!as_path && !as_hole) return "P is neither an induced path nor a hole through x_i x_j";
    VertexSet inner = VertexSet::of(g.n(), p) - g.set({xi, xj});
    if (inner != c.h) return "H differs from P minus its ends";
    VertexSet nk = g.neighbors(xk) & c.h;
    const bool two_nonadjacent = !g.is_clique(nk);
    const bool adjacent_pair = nk.size() == 2 && g.is_clique(nk);
    if (!two_nonadjacent && !adjacent_pair) return "third vertex attaches to H in neither allowed way";
    return std::nullopt;
  }
  if (c.paths.size() != 3) return "expected three paths";
  VertexSet all = g.empty_set();
  for (int i = 0; i < 3; ++i) {
    const auto& p = c.paths[i];
    if (p.size() < 2 || p.back() != xs[i]) return "path " + std::to_string(i + 1) + " does not end at x_" + std::to_string(i + 1);
    if (!is_induced_path(g, p)) return "path " + std::to_string(i + 1) + " is not induced";
    all |= VertexSet::of(g.n(), p);
  }
  if (all - xset != c.h) return "H differs from the union of the paths minus x1, x2, x3";
  if (c.outcome == O::center) {
    if (c.roles.size() != 1) return "malformed outcome (ii)";
    const Vertex a = c.roles[0];
    std::array<VertexSet, 3> tails{g.empty_set(), g.empty_set(), g.empty_set()};
    for (int i = 0; i < 3; ++i) {
      if (c.paths[i].front() != a) return "path does not start at the centre";
      tails[i] = VertexSet::of(g.n(), c.paths[i]);
      tails[i].erase(a);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (tails[i].intersects(tails[j])) return "paths share more than the centre";
        for (Vertex u : tails[i])
          for (Vertex v : g.neighbors(u) & tails[j])
            if (!(u == xs[i] && v == xs[j])) return "extra edge between two paths";
      }
    return std::nullopt;
  }
  if (c.roles.size() != 3 || !g.is_clique(g.set({c.roles[0], c.roles[1], c.roles[2]})))
    return "outcome (iii) needs a triangle";
  std::array<VertexSet, 3> ps{g.empty_set(), g.empty_set(), g.empty_set()};
  for (int i = 0; i < 3; ++i) {
    if (c.paths[i].front() != c.roles[i]) return "path does not start at its triangle vertex";
    ps[i] = VertexSet::of(g.n(), c.paths[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (ps[i].intersects(ps[j])) return "paths are not disjoint";
      for (Vertex u : ps[i])
        for (Vertex v : g.neighbors(u) & ps[j]) {
          const bool triangle_edge = u == c.roles[i] && v == c.roles[j];
          const bool end_edge = u == xs[i] && v == xs[j];
          if (!triangle_edge && !end_edge) return "extra edge between two paths";
        }
    }
  return std::nullopt;
}

ConnectorClass classify_minimal_connector(const Graph& g, Vertex x1, Vertex x2, Vertex x3) {
  const std::array<Vertex, 3> xs{x1, x2, x3};
  if (x1 == x2 || x1 == x3 || x2 == x3) throw InvalidInput("connector endpoints must be distinct");
  const VertexSet rest = g.all() - g.set({x1, x2, x3});
  VertexSet h = g.empty_set();
  for (const auto& comp : components(g, rest))
    if (connector_ok(g, comp, xs)) {
      h = comp;
      break;
    }
  if (h.empty()) throw NoConnector("no connected subgraph avoiding x1, x2, x3 meets all three neighbourhoods");

  // Shrink to the union of shortest links, then delete greedily.
  {
    const Vertex root = (g.neighbors(x1) & h).first();
    VertexSet seed = g.set({root});
    for (Vertex x : {x2, x3}) {
      std::vector<Vertex> best;
      for (Vertex t : g.neighbors(x) & h) {
        auto p = shortest_path(g, root, t, h);
        if (!p.empty() && (best.empty() || p.size() < best.size())) best = p;
      }
      seed |= VertexSet::of(g.n(), best);
    }
    h = seed;
  }
  for (bool changed = true; changed;) {
    changed = false;
    const auto members = h.to_vector();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const Vertex v = *it;
      VertexSet smaller = h;
      smaller.erase(v);
      if (connector_ok(g, smaller, xs)) {
        h = smaller;
        changed = true;
      }
    }
  }

  using O = ConnectorClass::Outcome;
  auto accept = [&](ConnectorClass c) -> std::optional<ConnectorClass> {
    if (verify_connector(g, xs, c)) return std::nullopt;
    return c;
  };

  // (i): H is a path whose ends carry x_i and x_j.
  if (auto order = path_order(g, h); !order.empty()) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int k = 3 - i - j;
        std::vector<Vertex> p{xs[i]};
        p.insert(p.end(), order.begin(), order.end());
        p.push_back(xs[j]);
        ConnectorClass c{O::path_or_hole, h, {xs[i], xs[j], xs[k]}, {p}};
        if (auto ok = accept(c)) return *ok;
      }
  }
  // (ii): a centre a with three legs.
  std::array<Vertex, 3> feet{};
  bool single_feet = true;
  for (int i = 0; i < 3; ++i) {
    VertexSet nb = g.neighbors(xs[i]) & h;
    if (nb.size() != 1) single_feet = false;
    feet[i] = nb.first();
  }
  if (single_feet) {
    for (Vertex a : h) {
      ConnectorClass c{O::center, h, {a}, {}};
      for (int i = 0; i < 3; ++i) c.paths.push_back(with_end(shortest_path(g, a, feet[i], h), xs[i]));
      if (auto ok = accept(c)) return *ok;
    }
    // (iii): a triangle with three legs.
    for (Vertex a1 : h)
      for (Vertex a2 : g.neighbors(a1) & h)
        for (Vertex a3 : g.neighbors(a1) & g.neighbors(a2) & h) {
          const std::array<Vertex, 3> tri{a1, a2, a3};
          ConnectorClass c{O::triangle, h, {a1, a2, a3}, {}};
          for (int i = 0; i < 3; ++i) {
            VertexSet through = h;
            for (int j = 0; j < 3; ++j)
              if (j != i) through.erase(tri[j]);
            c.paths.push_back(with_end(shortest_path(g, tri[i], feet[i], through), xs[i]));
          }
          if (auto ok = accept(c)) return *ok;
        }
  }
  throw InternalError("minimal connector matches none of the three attachment outcomes");
}

}  // namespace talpha

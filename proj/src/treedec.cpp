#include "talpha/treedec.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "talpha/balsep.hpp"
#include "talpha/witness.hpp"

namespace talpha {

int TreeDecomposition::add_bag(VertexSet bag) {
  bags.push_back(std::move(bag));
  return size() - 1;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [s, t] : edges) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  return adj;
}

namespace {

// Nodes reachable from `start` using only nodes accepted by `keep`.
std::vector<int> reach(const std::vector<std::vector<int>>& adj, int start, const std::function<bool(int)>& keep) {
  std::vector<int> seen{start}, stack{start};
  std::vector<char> mark(adj.size(), 0);
  mark[start] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : adj[s])
      if (!mark[t] && keep(t)) {
        mark[t] = 1;
        seen.push_back(t);
        stack.push_back(t);
      }
  }
  return seen;
}

Witness lift(Witness w, const InducedSubgraph& sub) {
  for (auto& v : w.anchors) v = sub.to_parent[v];
  for (auto& p : w.paths)
    for (auto& v : p) v = sub.to_parent[v];
  return w;
}

bool is_hole_set(const Graph& g, const VertexSet& s) {
  const auto order = cyclic_order(g, s);
  return static_cast<int>(order.size()) == s.size() && is_hole(g, order);
}

}  // namespace

TdValidation validate_td(const Graph& g, const TreeDecomposition& td) {
  TdValidation r;
  auto fail = [&](int axiom, std::string msg) {
    r.ok = false;
    r.violations.push_back({axiom, std::move(msg)});
  };
  const int nodes = td.size();
  if (td.n != g.n()) fail(0, "decomposition is for " + std::to_string(td.n) + " vertices, graph has " + std::to_string(g.n()));
  for (int i = 0; i < nodes; ++i)
    if (td.bags[i].universe() != g.n()) fail(0, "bag " + std::to_string(i + 1) + " has the wrong universe");
  for (auto [s, t] : td.edges)
    if (s < 0 || t < 0 || s >= nodes || t >= nodes || s == t)
      fail(0, "bad tree edge " + std::to_string(s + 1) + "-" + std::to_string(t + 1));
  if (!r.ok) return r;
  if (nodes == 0) {
    if (g.n() > 0) fail(1, "no bags");
    return r;
  }
  const auto adj = td.adjacency();
  if (static_cast<int>(td.edges.size()) != nodes - 1 ||
      static_cast<int>(reach(adj, 0, [](int) { return true; }).size()) != nodes)
    fail(0, "node graph is not a tree");
  if (!r.ok) return r;

  VertexSet covered(g.n());
  for (const auto& b : td.bags) covered |= b;
  for (Vertex v : g.all() - covered) fail(1, "vertex " + g.label(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool in_bag = false;
    for (const auto& b : td.bags)
      if (b.contains(u) && b.contains(v)) {
        in_bag = true;
        break;
      }
    if (!in_bag) fail(2, "edge " + g.label(u) + "-" + g.label(v) + " is in no bag");
  }
  for (Vertex v : covered) {
    int first = -1, count = 0;
    for (int i = 0; i < nodes; ++i)
      if (td.bags[i].contains(v)) {
        if (first < 0) first = i;
        ++count;
      }
    const auto seen = reach(adj, first, [&](int t) { return td.bags[t].contains(v); });
    if (static_cast<int>(seen.size()) != count) fail(3, "bags holding vertex " + g.label(v) + " are disconnected");
  }
  return r;
}

TdStats td_stats(const Graph& g, const TreeDecomposition& td, int cover_guard) {
  TdStats s;
  for (const auto& b : td.bags) {
    s.width = std::max(s.width, b.size() - 1);
    const int a = independence_number(g, b);
    const CoverBound c = cover_bound(g, b, cover_guard);
    s.bag_independence.push_back(a);
    s.bag_cover.push_back(c.upper);
    s.independence = std::max(s.independence, a);
    s.cover = std::max(s.cover, c.upper);
    s.cover_lower = std::max(s.cover_lower, c.lower);
    s.cover_exact = s.cover_exact && c.exact();
  }
  return s;
}

TreeDecomposition single_bag(const Graph& g) {
  TreeDecomposition td;
  td.n = g.n();
  td.add_bag(g.all());
  return td;
}

TreeDecomposition hole_fan(int n, const std::vector<Vertex>& cycle) {
  TreeDecomposition td;
  td.n = n;
  for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
    const int node = td.add_bag(VertexSet(n, {cycle[0], cycle[i], cycle[i + 1]}));
    if (node > 0) td.add_edge(node - 1, node);
  }
  return td;
}

TreeDecomposition wheel_free_decomposition(const Graph& g) {
  if (g.n() == 0) return single_bag(g);
  const AtomTree tree = atom_decomposition(g);
  std::vector<TreeDecomposition> parts;
  for (const auto& atom : tree.atoms) {
    if (g.is_clique(atom.vertices)) {
      TreeDecomposition td;
      td.n = g.n();
      td.add_bag(atom.vertices);
      parts.push_back(std::move(td));
    } else if (is_hole_set(g, atom.vertices)) {
      parts.push_back(hole_fan(g.n(), cyclic_order(g, atom.vertices)));
    } else {
      const InducedSubgraph sub = g.induced(atom.vertices);
      const Detection d = find_3pc_or_wheel(sub.graph);
      if (d.found()) throw NotInClass(lift(*d.witness, sub));
      throw InternalError("an atom without a three-path configuration or wheel is neither complete nor a hole");
    }
  }
  return compose_td_over_atoms(g, tree, parts).td;
}

Composition compose_td_over_atoms(const Graph& g, const AtomTree& atoms, const std::vector<TreeDecomposition>& parts) {
  if (parts.size() != atoms.atoms.size()) throw InvalidInput("one decomposition per atom is required");
  Composition out;
  out.td.n = g.n();
  std::vector<TreeDecomposition> local = parts;
  auto holder = [&](int i, const VertexSet& k) {
    for (int t = 0; t < local[i].size(); ++t)
      if (k.is_subset_of(local[i].bags[t])) return t;
    return -1;
  };
  // A clique always lies in some bag of a valid decomposition; repair otherwise.
  auto ensure = [&](int i, const VertexSet& k) {
    int t = holder(i, k);
    if (t >= 0) return t;
    int best = 0;
    for (int s = 1; s < local[i].size(); ++s)
      if (local[i].bags[s].intersection_size(k) > local[i].bags[best].intersection_size(k)) best = s;
    t = local[i].add_bag(k);
    if (t > 0) local[i].add_edge(best, t);
    out.repaired.push_back(i);
    return t;
  };
  std::vector<int> offset(local.size(), 0);
  for (std::size_t i = 0; i < atoms.atoms.size(); ++i) {
    const Atom& a = atoms.atoms[i];
    if (a.parent >= 0) {
      ensure(static_cast<int>(i), a.cut_clique);
      ensure(a.parent, a.cut_clique);
    }
  }
  for (std::size_t i = 0; i < local.size(); ++i) {
    offset[i] = out.td.size();
    for (const auto& b : local[i].bags) out.td.add_bag(b);
    for (auto [s, t] : local[i].edges) out.td.add_edge(offset[i] + s, offset[i] + t);
  }
  for (std::size_t i = 0; i < atoms.atoms.size(); ++i) {
    const Atom& a = atoms.atoms[i];
    if (a.parent < 0) continue;
    out.td.add_edge(offset[i] + holder(static_cast<int>(i), a.cut_clique),
                    offset[a.parent] + holder(a.parent, a.cut_clique));
  }
  std::sort(out.repaired.begin(), out.repaired.end());
  out.repaired.erase(std::unique(out.repaired.begin(), out.repaired.end()), out.repaired.end());
  return out;
}

int ta_exact_small(const Graph& g, int guard) {
  const int n = g.n();
  if (n > guard || n > 24) throw TooLarge("ta_exact_small", n, std::min(guard, 24));
  if (n == 0) return 0;
  using Mask = std::uint32_t;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::vector<std::uint8_t> alpha(std::size_t{1} << n, 0);
  for (Mask m = 1; m <= full; ++m) {
    const int v = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    alpha[m] = std::max<std::uint8_t>(alpha[rest], static_cast<std::uint8_t>(1 + alpha[rest & ~adj[v]]));
  }
  // best[S]: least max bag independence when S is eliminated first.
  std::vector<std::uint8_t> best(std::size_t{1} << n, 255);
  best[0] = 0;
  for (Mask s = 0; s < full; ++s) {
    if (best[s] == 255) continue;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      // Vertices outside S ∪ {v} reachable from v through S.
      Mask seen = Mask{1} << v, frontier = seen, q = 0;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        q |= next & ~s;
        frontier = next & s;
      }
      const std::uint8_t cost = std::max(best[s], alpha[q | (Mask{1} << v)]);
      const Mask t = s | (Mask{1} << v);
      best[t] = std::min(best[t], cost);
    }
  }
  return best[full];
}

long long g_bound(int k) {
  const long long m = 4LL * k + 1;
  return m * (m - 1) / 2 + k;
}

namespace {

struct Builder {
  const Graph& g;
  const SeparatorOracle& oracle;
  int k;
  BuildReport& report;
  TreeDecomposition td;

  int run(const VertexSet& s, VertexSet w, int depth) {
    report.depth = std::max(report.depth, depth);
    if (independence_number(g, s) <= 4 * k) return td.add_bag(s);
    const long long budget = g_bound(k) - k;
    if (greedy_clique_cover(g, w).size() > static_cast<std::size_t>(budget) && cover_bound(g, w, 24).lower > budget)
      throw CoverBudgetExceeded("carried set needs more than " + std::to_string(budget) + " cliques");
    for (Vertex v : s - w) {
      if (independence_number(g, w) >= 4 * k) break;
      w.insert(v);
    }
    VertexSet stable(g.n());
    for (Vertex v : maximum_stable_set(g, w)) {
      if (stable.size() == 4 * k) break;
      stable.insert(v);
    }
    const InducedSubgraph sub = g.induced(s);
    std::vector<Rational> weights(static_cast<std::size_t>(sub.graph.n()), 0);
    for (Vertex v : stable) weights[sub.local(v)] = Rational(1, 4 * k);
    const WeightFunction wf(weights);
    const BalancedSeparator sep = oracle(sub.graph, wf);
    ++report.oracle_calls;
    report.max_oracle_cover = std::max(report.max_oracle_cover, sep.cover_size());
    report.assertions.insert(report.assertions.end(), sep.assertions.begin(), sep.assertions.end());
    if (!balances(sub.graph, wf, sep.x)) throw OracleFailure("oracle returned an unbalanced set", sep.cover_size());
    if (sep.cover_size() > k)
      throw OracleFailure("oracle separator needs " + std::to_string(sep.cover_size()) + " cliques, more than " +
                              std::to_string(k),
                          sep.cover_size());
    const VertexSet x = sub.lift(sep.x);
    const int node = td.add_bag(w | x);
    for (const auto& d : components(g, s - x)) {
      int child;
      if ((d | x) == s) {
        ++report.guard_hits;
        child = td.add_bag(s);
      } else {
        child = run(d | x, (w & d) | x, depth + 1);
      }
      td.add_edge(node, child);
    }
    return node;
  }
};

}  // namespace

TreeDecomposition build_td(const Graph& g, const SeparatorOracle& oracle, int k, BuildReport* report) {
  if (k < 1) throw InvalidInput("k must be positive");
  BuildReport local;
  Builder b{g, oracle, k, report ? *report : local, {}};
  b.td.n = g.n();
  if (g.n() == 0) return single_bag(g);
  b.run(g.all(), g.empty_set(), 0);
  return b.td;
}

PipelineResult ta_pipeline(const Graph& g, const PipelineOptions& options) {
  PipelineResult res;
  const SeparatorOracle oracle =
      options.oracle ? options.oracle
                     : SeparatorOracle([](const Graph& h, const WeightFunction& w) { return weighted_separator_oracle(h, w); });
  if (g.n() == 0) {
    res.td = single_bag(g);
    res.stats = td_stats(g, res.td, options.cover_guard);
    return res;
  }
  const AtomTree tree = atom_decomposition(g);
  std::vector<TreeDecomposition> parts;
  for (const auto& atom : tree.atoms) {
    AtomReport ar;
    ar.vertices = atom.vertices;
    TreeDecomposition td;
    td.n = g.n();
    if (g.is_clique(atom.vertices)) {
      ar.route = "complete";
      td.add_bag(atom.vertices);
    } else if (is_hole_set(g, atom.vertices)) {
      ar.route = "hole";
      td = hole_fan(g.n(), cyclic_order(g, atom.vertices));
    } else {
      ar.route = "separators";
      const InducedSubgraph sub = g.induced(atom.vertices);
      for (int k = 1;;) {
        ar.build = BuildReport{};
        try {
          const TreeDecomposition local = build_td(sub.graph, oracle, k, &ar.build);
          for (const auto& b : local.bags) td.add_bag(sub.lift(b));
          td.edges = local.edges;
          ar.k = k;
          break;
        } catch (const OracleFailure& e) {
          const int next = std::max(k + 1, e.cover());
          if (next > options.max_k) throw;
          k = next;
        }
      }
      res.assertions.insert(res.assertions.end(), ar.build.assertions.begin(), ar.build.assertions.end());
    }
    parts.push_back(std::move(td));
    res.atoms.push_back(std::move(ar));
  }
  Composition c = compose_td_over_atoms(g, tree, parts);
  res.td = std::move(c.td);
  res.repaired = std::move(c.repaired);
  const TdValidation v = validate_td(g, res.td);
  require_claim(res.assertions, "decomposition-valid", v.ok, v.ok ? "" : v.violations.front().detail);
  res.stats = td_stats(g, res.td, options.cover_guard);
  return res;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  int widest = 0;
  for (const auto& b : td.bags) widest = std::max(widest, b.size());
  out << "s td " << td.size() << ' ' << widest << ' ' << td.n << '\n';
  for (int i = 0; i < td.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [s, t] : td.edges) out << s + 1 << ' ' << t + 1 << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  TreeDecomposition td;
  std::string line;
  int declared = -1, lineno = 0;
  bool header = false;
  std::vector<char> seen;
  auto bad = [&](const std::string& msg) { throw InvalidInput("td line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int widest = 0;
      if (header || !(ls >> kind >> declared >> widest >> td.n) || kind != "td" || declared < 0 || td.n < 0)
        bad("bad header");
      header = true;
      td.bags.assign(declared, VertexSet(td.n));
      seen.assign(declared, 0);
    } else if (!header) {
      bad("missing header");
    } else if (tok == "b") {
      int id;
      if (!(ls >> id) || id < 1 || id > declared || seen[id - 1]) bad("bad bag id");
      seen[id - 1] = 1;
      int v;
      while (ls >> v) {
        if (v < 1 || v > td.n) bad("vertex out of range");
        td.bags[id - 1].insert(v - 1);
      }
      if (!ls.eof()) bad("bad vertex");
    } else {
      int s, t;
      std::istringstream es(line);
      if (!(es >> s >> t) || s < 1 || t < 1 || s > declared || t > declared) bad("bad tree edge");
      td.add_edge(s - 1, t - 1);
    }
  }
  if (!header) throw InvalidInput("td: missing header");
  for (int i = 0; i < declared; ++i)
    if (!seen[i]) throw InvalidInput("td: bag " + std::to_string(i + 1) + " is missing");
  return td;
}

}  // namespace talpha

#include "talpha/mwis.hpp"

#include <functional>
#include <map>
#include <optional>

#include "talpha/cover.hpp"

namespace talpha {

namespace {

void check_weights(const Graph& g, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != g.n())
    throw InvalidInput(std::to_string(w.size()) + " weights for " + std::to_string(g.n()) + " vertices");
  for (std::size_t v = 0; v < w.size(); ++v)
    if (w[v] < 0) throw InvalidInput("negative weight on vertex " + std::to_string(v + 1));
}

struct Entry {
  Rational value;
  VertexSet witness;
};

struct LexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return lex_less(a, b); }
};
using Table = std::map<VertexSet, Entry, LexLess>;

void offer(Table& t, const VertexSet& state, Entry e) {
  auto it = t.find(state);
  if (it == t.end()) {
    t.emplace(state, std::move(e));
    return;
  }
  Entry& cur = it->second;
  if (e.value > cur.value || (e.value == cur.value && mwis_prefers(e.witness, cur.witness))) cur = std::move(e);
}

MwisResult finish(const Graph& g, const std::vector<Rational>& w, VertexSet set, const std::string& method) {
  if (!g.is_stable(set)) throw InternalError(method + " produced a set that is not stable");
  MwisResult r{std::move(set), 0, method};
  for (Vertex v : r.set) r.value += w[v];
  return r;
}

}  // namespace

bool mwis_prefers(const VertexSet& a, const VertexSet& b) {
  const Vertex v = (a ^ b).first();
  return v >= 0 && a.contains(v);
}

NiceTd make_nice(const TreeDecomposition& td) {
  NiceTd out;
  out.n = td.n;
  auto push = [&](NiceNode node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  };
  auto step = [&](int child, NiceNode::Kind kind, Vertex v) {
    VertexSet bag = out.nodes[child].bag;
    if (kind == NiceNode::Kind::introduce)
      bag.insert(v);
    else
      bag.erase(v);
    return push({kind, std::move(bag), v, {child}});
  };
  // Forgets what the target bag lacks, then introduces what it adds.
  auto morph = [&](int node, const VertexSet& target) {
    for (Vertex v : out.nodes[node].bag - target) node = step(node, NiceNode::Kind::forget, v);
    for (Vertex v : target - out.nodes[node].bag) node = step(node, NiceNode::Kind::introduce, v);
    return node;
  };
  if (td.size() == 0) {
    push({NiceNode::Kind::leaf, VertexSet(td.n), -1, {}});
    return out;
  }
  const auto adj = td.adjacency();
  std::function<int(int, int)> build = [&](int t, int parent) {
    std::vector<int> chains;
    for (int c : adj[t])
      if (c != parent) chains.push_back(morph(build(c, t), td.bags[t]));
    if (chains.empty()) chains.push_back(morph(push({NiceNode::Kind::leaf, VertexSet(td.n), -1, {}}), td.bags[t]));
    int cur = chains[0];
    for (std::size_t i = 1; i < chains.size(); ++i)
      cur = push({NiceNode::Kind::join, td.bags[t], -1, {cur, chains[i]}});
    return cur;
  };
  morph(build(0, -1), VertexSet(td.n));
  return out;
}

MwisResult mwis_td(const Graph& g, const std::vector<Rational>& w, const TreeDecomposition& td,
                   int independence_guard) {
  check_weights(g, w);
  const TdValidation valid = validate_td(g, td);
  if (!valid.ok) throw InvalidInput("invalid decomposition: " + valid.violations.front().detail);
  for (int i = 0; i < td.size(); ++i) {
    const int a = independence_number(g, td.bags[i]);
    if (a > independence_guard) throw StateBlowup(i, a, independence_guard);
  }
  const NiceTd nice = make_nice(td);
  std::vector<std::optional<Table>> tables(nice.nodes.size());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& node = nice.nodes[i];
    Table t;
    switch (node.kind) {
      case NiceNode::Kind::leaf:
        t.emplace(VertexSet(g.n()), Entry{0, VertexSet(g.n())});
        break;
      case NiceNode::Kind::introduce: {
        Table& child = *tables[node.children[0]];
        for (auto& [state, e] : child) {
          if (!g.neighbors(node.vertex).intersects(state)) {
            VertexSet s = state, wit = e.witness;
            s.insert(node.vertex);
            wit.insert(node.vertex);
            offer(t, s, {e.value + w[node.vertex], std::move(wit)});
          }
          offer(t, state, std::move(e));
        }
        break;
      }
      case NiceNode::Kind::forget: {
        Table& child = *tables[node.children[0]];
        for (auto& [state, e] : child) {
          VertexSet s = state;
          s.erase(node.vertex);
          offer(t, s, std::move(e));
        }
        break;
      }
      case NiceNode::Kind::join: {
        Table& left = *tables[node.children[0]];
        Table& right = *tables[node.children[1]];
        for (auto& [state, l] : left) {
          const auto it = right.find(state);
          if (it == right.end()) continue;
          Rational shared = 0;
          for (Vertex v : state) shared += w[v];
          offer(t, state, {l.value + it->second.value - shared, l.witness | it->second.witness});
        }
        break;
      }
    }
    for (int c : node.children) tables[c].reset();
    tables[i] = std::move(t);
  }
  const Table& root = *tables[nice.root()];
  return finish(g, w, root.begin()->second.witness, "td-dp");
}

MwisResult mwis_bruteforce(const Graph& g, const std::vector<Rational>& w, int guard) {
  check_weights(g, w);
  const int n = g.n();
  if (n > guard || n > 24) throw TooLarge("mwis_bruteforce", n, std::min(guard, 24));
  std::vector<Rational> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + w[v];
  VertexSet best(n), cur(n);
  Rational best_value = 0;
  bool have = false;
  // Including v is tried first, so among equal values the preferred set is met first.
  std::function<void(int, const Rational&, const VertexSet&)> rec = [&](int v, const Rational& value,
                                                                       const VertexSet& blocked) {
    if (have && value + suffix[v] < best_value) return;
    if (v == n) {
      if (!have || value > best_value || (value == best_value && mwis_prefers(cur, best))) {
        best = cur;
        best_value = value;
        have = true;
      }
      return;
    }
    if (!blocked.contains(v)) {
      cur.insert(v);
      rec(v + 1, value + w[v], blocked | g.neighbors(v));
      cur.erase(v);
    }
    rec(v + 1, value, blocked);
  };
  rec(0, 0, VertexSet(n));
  return finish(g, w, best, "brute-force");
}

}  // namespace talpha

#include "talpha/balsep.hpp"

#include <algorithm>

#include "talpha/cover.hpp"

namespace talpha {

namespace {

const Rational kHalf(1, 2);

// Visits the size-k subsets of {0..m-1} in lexicographic order until `visit`
// returns true or the budget is spent. Returns true when `visit` succeeded.
bool for_each_subset(int m, int k, long long& budget, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (budget-- <= 0) return false;
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string show(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + g.label(v);
  return out + "}";
}

BalancedSeparator lift(const BalancedSeparator& local, const InducedSubgraph& sub) {
  BalancedSeparator out = local;
  out.x = sub.lift(local.x);
  for (auto& k : out.cover) k = sub.lift(k);
  return out;
}

}  // namespace

bool balances(const Graph& g, const WeightFunction& w, const VertexSet& x, const Rational& c) {
  for (const auto& d : components(g, g.all() - x))
    if (w.of(d) > c) return false;
  return true;
}

BalancedSeparator certify(const Graph& g, const WeightFunction& w, const VertexSet& x, const Rational& c,
                          const std::string& route) {
  BalancedSeparator s;
  s.x = x;
  s.threshold = c;
  s.route = route;
  for (const auto& d : components(g, g.all() - x)) {
    const Rational wd = w.of(d);
    if (wd > c) throw VerificationFailed(route + ": a component of weight " + wd.str() + " remains beside " + show(g, x));
    s.component_weights.push_back(wd);
  }
  s.cover = cover_bound(g, x, 24).cover;
  if (!is_clique_cover(g, s.cover, x)) throw InternalError("separator cover is not a clique partition");
  return s;
}

BalancedSeparator centroid_bag_separator(const Graph& g, const TreeDecomposition& td, const WeightFunction& w,
                                         const Rational& c) {
  if (td.size() == 0) return certify(g, w, g.empty_set(), c, "centroid");
  const auto adj = td.adjacency();
  int cur = 0, prev = -1;
  for (int step = 0; step <= td.size(); ++step) {
    const VertexSet& bag = td.bags[cur];
    std::optional<VertexSet> heavy;
    for (const auto& d : components(g, g.all() - bag))
      if (w.of(d) > c) heavy = d;
    if (!heavy) return certify(g, w, bag, c, "centroid");
    // Step towards the branch whose bags hold the heavy component.
    int next = -1;
    for (int t : adj[cur]) {
      if (t == prev) continue;
      std::vector<int> stack{t};
      std::vector<char> mark(adj.size(), 0);
      mark[cur] = mark[t] = 1;
      bool hit = false;
      while (!stack.empty() && !hit) {
        const int s = stack.back();
        stack.pop_back();
        hit = td.bags[s].intersects(*heavy);
        for (int u : adj[s])
          if (!mark[u]) {
            mark[u] = 1;
            stack.push_back(u);
          }
      }
      if (hit) {
        next = t;
        break;
      }
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  // Only reachable for an invalid decomposition: scan every bag.
  for (const auto& bag : td.bags)
    if (balances(g, w, bag, c)) return certify(g, w, bag, c, "centroid");
  throw VerificationFailed("no bag of the decomposition is balanced");
}

BalancedSeparator balanced_separator_wheelfree(const Graph& g, const WeightFunction& w) {
  BalancedSeparator s = centroid_bag_separator(g, wheel_free_decomposition(g), w);
  s.route = "wheelfree";
  require_claim(s.assertions, "wheel-free-cover", s.cover_size() <= 2,
                std::to_string(s.cover_size()) + " cliques");
  return s;
}

std::optional<BalancedSeparator> exhaustive_balanced_separator(const Graph& g, const WeightFunction& w,
                                                               const Rational& c, int size_limit,
                                                               long long subset_budget, bool* exhausted) {
  if (exhausted) *exhausted = false;
  const int n = g.n();
  // Among the smallest, prefer the lightest heaviest component, then lex order.
  std::optional<VertexSet> found;
  Rational best_heaviest = 0;
  for (int k = 0; k <= std::min(size_limit, n) && !found; ++k) {
    for_each_subset(n, k, subset_budget, [&](const std::vector<int>& idx) {
      VertexSet x(n);
      for (int v : idx) x.insert(v);
      Rational heaviest = 0;
      for (const auto& d : components(g, g.all() - x)) heaviest = std::max(heaviest, w.of(d));
      if (heaviest > c || (found && heaviest >= best_heaviest)) return false;
      found = x;
      best_heaviest = heaviest;
      return heaviest == 0;
    });
    if (subset_budget < 0) {
      if (exhausted) *exhausted = true;
      return std::nullopt;
    }
  }
  if (!found) return std::nullopt;
  return certify(g, w, *found, c, "fallback");
}

std::optional<BalancedSeparator> clique_union_balanced_separator(const Graph& g, const WeightFunction& w,
                                                                 const Rational& c, int max_cliques,
                                                                 long long subset_budget, bool* exhausted) {
  if (exhausted) *exhausted = false;
  if (balances(g, w, g.empty_set(), c)) return certify(g, w, g.empty_set(), c, "fallback");
  const auto cliques = maximal_cliques(g);
  const int m = static_cast<int>(cliques.size());
  std::optional<VertexSet> found;
  for (int k = 1; k <= std::min(max_cliques, m) && !found; ++k) {
    const bool hit = for_each_subset(m, k, subset_budget, [&](const std::vector<int>& idx) {
      VertexSet x(g.n());
      for (int i : idx) x |= cliques[i];
      if (!balances(g, w, x, c)) return false;
      found = x;
      return true;
    });
    if (!hit && subset_budget < 0) {
      if (exhausted) *exhausted = true;
      return std::nullopt;
    }
  }
  if (!found) return std::nullopt;
  return certify(g, w, *found, c, "fallback");
}

BalancedSeparator balanced_separator_central_bag(const Graph& g, const WeightFunction& w, const HubDivision& hd,
                                                 long long search_budget) {
  (void)w;
  Transcript t = hd.transcript;
  const auto [sub, wb] = hd.bag.restricted(g);
  const Graph& b = sub.graph;
  BalancedSeparator local;
  std::string route;
  if (hd.all_hubs_unbalanced()) {
    const Detection wheel = find_wheel(b, WheelFilter::any);
    require_claim(t, "bag-wheel-free", !wheel.found(),
                  wheel.found() ? "hub " + g.label(sub.to_parent[wheel.witness->anchors[0]]) : "");
    local = balanced_separator_wheelfree(b, wb);
    route = "central_bag/wheelfree";
  } else {
    const Vertex vm = sub.local(hd.first_balanced_hub());
    std::optional<VertexSet> cand;
    if (balances(b, wb, b.closed_neighbors(vm))) {
      // Drop neighbourhood cliques while the rest still balances.
      VertexSet x = b.closed_neighbors(vm);
      for (const auto& part : cover_bound(b, b.neighbors(vm), 24).cover)
        if (balances(b, wb, x - part)) x -= part;
      if (cover_bound(b, x, 24).upper <= 9) cand = x;
    }
    if (cand) {
      local = certify(b, wb, *cand, kHalf, "neighbourhood");
      route = "central_bag/neighbourhood";
    } else {
      bool exhausted = false;
      auto found = clique_union_balanced_separator(b, wb, kHalf, 9, search_budget, &exhausted);
      require_claim(t, "central-bag-cover", found.has_value(),
                    exhausted ? "search budget exhausted before a separator within 9 cliques was found"
                              : "no balanced separator of the bag within 9 cliques");
      local = *found;
      route = "central_bag/clique_union";
    }
  }
  BalancedSeparator out = lift(local, sub);
  out.route = route;
  out.assertions = t;
  out.assertions.insert(out.assertions.end(), local.assertions.begin(), local.assertions.end());
  require_claim(out.assertions, "central-bag-cover", out.cover_size() <= 9,
                std::to_string(out.cover_size()) + " cliques");
  return out;
}

Extension extend_separator(const Graph& g, const WeightFunction& w, const HubDivision& hd,
                           const BalancedSeparator& bag_separator) {
  Extension ext;
  Transcript& tr = ext.sep.assertions;
  tr = bag_separator.assertions;
  const VertexSet& beta = hd.bag.bag;
  const int n = g.n();

  ext.x_tilde = VertexSet(n);
  for (const auto& k : bag_separator.cover) {
    if (k.empty()) continue;
    ++ext.t;
    try {
      ext.x_tilde |= maximal_clique_extension(g, k);
    } catch (const AmbiguousExtension&) {
      require_claim(tr, "unique-clique-extension", false, show(g, k) + " lies in two maximal cliques");
    }
  }
  const int t = ext.t;
  {
    const auto [sub, wb] = hd.bag.restricted(g);
    require_claim(tr, "extended-bag-separator", balances(sub.graph, wb, sub.lower(ext.x_tilde & beta)));
  }
  std::string worst;
  bool ok = true;
  for (int i = 0; i < hd.prefix; ++i) {
    const Vertex x = hd.order[i];
    const auto it = hd.prefix_covers.find(x);
    const int size = it == hd.prefix_covers.end() ? cover_bound(g, g.neighbors(x) & beta, 24).upper
                                                  : static_cast<int>(it->second.size());
    if (size > 5 && ok) {
      ok = false;
      worst = "vertex " + g.label(x) + " needs " + std::to_string(size) + " cliques";
    }
  }
  require_claim(tr, "prefix-neighbourhood-cover", ok, worst);

  AuxBipartite aux;
  aux.d = components(g, g.all() - (beta | ext.x_tilde));
  aux.q = components(g, beta - ext.x_tilde);
  for (const auto& d : aux.d) {
    Vertex anchor = -1;
    for (std::size_t j = 0; j < hd.bag.outside.size() && anchor < 0; ++j)
      if (d.is_subset_of(hd.bag.outside[j])) anchor = hd.collection.members[hd.bag.anchor[j]].v;
    if (anchor < 0) throw InternalError("outside component without an anchor");
    aux.anchor.push_back(anchor);
  }
  const int r = aux.r(), s = aux.s();
  GraphBuilder hb(r + s);
  for (int i = 0; i < r; ++i) {
    const VertexSet nd = g.neighbors(aux.d[i]);
    for (int j = 0; j < s; ++j)
      if (nd.intersects(aux.q[j])) hb.add_edge(i, r + j);
  }
  aux.h = hb.build();
  aux.core = VertexSet(r + s);
  for (int j = 0; j < s; ++j) aux.core.insert(r + j);
  for (int i = 0; i < r; ++i)
    if (ext.x_tilde.contains(aux.anchor[i])) aux.core.insert(i);
  for (const auto& d : aux.d) aux.raw_weights.push_back(w.of(d));
  for (const auto& q : aux.q) aux.raw_weights.push_back(w.of(q));
  const Graph& h = aux.h;

  const int gamma = 5 * t + 1;
  std::optional<VertexSet> long_hole;
  const HoleScan scan = for_each_hole(h, aux.core, Budget{}, [&](const std::vector<Vertex>&, const VertexSet& hole) {
    if (hole.size() >= gamma) long_hole = hole;
    return !long_hole;
  });
  ext.long_hole_scan_complete = scan.completed || scan.stopped;
  require_claim(tr, "core-long-hole-free", !long_hole,
                long_hole ? "hole of length " + std::to_string(long_hole->size()) + " >= " + std::to_string(gamma)
                          : (ext.long_hole_scan_complete ? "" : "scan truncated; no long hole seen"));
  ok = true;
  worst.clear();
  for (int i = 0; i < r; ++i) {
    const int deg = (h.neighbors(i) & aux.core).size();
    if (aux.core.contains(i) && deg > 5 && ok) {
      ok = false;
      worst = "outside component " + std::to_string(i) + " meets " + std::to_string(deg) + " bag components";
    }
  }
  require_claim(tr, "core-degree", ok, worst);
  ok = true;
  for (int i = 0; i < r; ++i)
    if (!aux.core.contains(i) && h.degree(i) > 1 && ok) {
      ok = false;
      worst = "outside component " + std::to_string(i) + " has degree " + std::to_string(h.degree(i));
    }
  require_claim(tr, "outside-degree", ok, worst);

  Rational total = 0;
  for (const auto& x : aux.raw_weights) total += x;
  if (total == 0) {
    ext.y = ext.x_tilde;
    const Transcript keep = tr;
    ext.sep = certify(g, w, ext.y, kHalf, "central_bag");
    ext.sep.assertions = keep;
    ext.bound = t;
    ext.aux = std::move(aux);
    return ext;
  }
  std::vector<Rational> normalized = aux.raw_weights;
  for (auto& x : normalized) x /= total;
  const WeightFunction wh(normalized);
  const auto z = exhaustive_balanced_separator(h, wh, kHalf, h.n());
  if (!z) throw VerificationFailed("no balanced separator of the auxiliary graph within the search budget");
  ext.z = z->x;
  ext.k = std::max(ext.z.size() - 1, 0);
  const VertexSet a_side = VertexSet::prefix(r + s, r);
  ext.z_prime = (ext.z - a_side) | h.neighbors(ext.z & a_side);
  require_claim(tr, "aux-separator-size", ext.z_prime.size() <= 5 * (ext.k + 1),
                std::to_string(ext.z_prime.size()) + " nodes for k = " + std::to_string(ext.k));

  VertexSet prefix(n);
  for (int i = 0; i < hd.prefix; ++i) prefix.insert(hd.order[i]);
  const VertexSet attached = prefix & ext.x_tilde & beta;
  ok = true;
  worst.clear();
  for (int j = 0; j < s; ++j) {
    int count = 0;
    for (Vertex v : attached) count += g.neighbors(v).intersects(aux.q[j]) ? 1 : 0;
    if (count > 3 * t && ok) {
      ok = false;
      worst = "bag component " + std::to_string(j) + " meets " + std::to_string(count) + " separator hubs";
    }
  }
  require_claim(tr, "bag-component-attachments", ok, worst);

  ext.y = ext.x_tilde;
  for (Vertex v : prefix & ext.x_tilde) {
    bool in_i = false;
    for (Vertex node : ext.z_prime)
      if (node >= r && g.neighbors(v).intersects(aux.q[node - r])) in_i = true;
    if (in_i) ext.y |= g.neighbors(v) & beta;
  }

  ok = true;
  worst.clear();
  for (const auto& f : components(h, h.all() - ext.z_prime)) {
    Rational wf = 0;
    for (Vertex node : f) wf += aux.raw_weights[node];
    if (wf > kHalf && ok) {
      ok = false;
      worst = "component weighs " + wf.str();
    }
  }
  require_claim(tr, "aux-component-weights", ok, worst);

  if (!balances(g, w, ext.y)) throw VerificationFailed("extended separator " + show(g, ext.y) + " is not balanced");
  const Transcript keep = tr;
  ext.sep = certify(g, w, ext.y, kHalf, "central_bag");
  ext.sep.assertions = keep;
  ext.bound = t + 75LL * t * (ext.k + 1);
  require_claim(ext.sep.assertions, "extension-cover-bound", ext.sep.cover_size() <= ext.bound,
                std::to_string(ext.sep.cover_size()) + " cliques, bound " + std::to_string(ext.bound));
  ext.aux = std::move(aux);
  return ext;
}

namespace {

BalancedSeparator fallback(const Graph& g, const WeightFunction& w, OracleLog* log, const std::string& why) {
  if (log) log->findings.push_back(why);
  if (auto s = clique_union_balanced_separator(g, w, kHalf, g.n())) return *s;
  if (auto s = exhaustive_balanced_separator(g, w, kHalf, g.n())) return *s;
  throw Unsolvable("no balanced separator found within the search budgets");
}

}  // namespace

BalancedSeparator weighted_separator_oracle(const Graph& g, const WeightFunction& w, OracleLog* log) {
  if (balances(g, w, g.empty_set())) return certify(g, w, g.empty_set(), kHalf, "clique_cutset");
  for (const auto& k : clique_minimal_separators(g))
    if (balances(g, w, k)) return certify(g, w, k, kHalf, "clique_cutset");

  if (const auto cut = find_clique_cutset(g)) {
    const VertexSet& k = cut->k;
    VertexSet heavy(g.n());
    for (const auto& d : components(g, g.all() - k))
      if (w.of(d) > kHalf) heavy = d;
    const InducedSubgraph sub = g.induced(heavy | k);
    std::vector<Rational> lumped = w.restricted(sub);
    const Rational rest = 1 - total_weight(w.values(), heavy | k);
    if (k.empty()) {
      const Rational wd = w.of(heavy);
      for (auto& x : lumped) x /= wd;
    } else {
      for (Vertex v : k) lumped[sub.local(v)] += rest / k.size();
    }
    const BalancedSeparator inner = weighted_separator_oracle(sub.graph, WeightFunction(lumped), log);
    const VertexSet x = sub.lift(inner.x);
    for (const VertexSet& cand : {x, x | k})
      if (balances(g, w, cand)) {
        BalancedSeparator s = certify(g, w, cand, kHalf, "clique_cutset");
        s.assertions = inner.assertions;
        return s;
      }
    return fallback(g, w, log, "lifted separator from the heavy side did not balance");
  }

  try {
    const HubDivision hd = hub_division(g, w);
    const BalancedSeparator bag_sep = balanced_separator_central_bag(g, w, hd);
    if (log) log->central_bag_runs.push_back({g.n(), bag_sep.cover_size(), hd.all_hubs_unbalanced()});
    Extension ext = extend_separator(g, w, hd, bag_sep);
    BalancedSeparator s = ext.sep;
    if (log) log->extensions.push_back(std::move(ext));
    return s;
  } catch (const VerificationFailed& e) {
    return fallback(g, w, log, e.what());
  } catch (const NotInClass& e) {
    return fallback(g, w, log, e.what());
  } catch (const NotFound& e) {
    return fallback(g, w, log, e.what());
  } catch (const TooLarge& e) {
    return fallback(g, w, log, e.what());
  }
}

}  // namespace talpha

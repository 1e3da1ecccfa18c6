#include "talpha/hub_division.hpp"

#include <algorithm>

#include "talpha/cover.hpp"

namespace talpha {

namespace {

// Components are cliques in a diamond-free neighbourhood, so the partition
// into components is then optimal; otherwise use the cover module.
std::vector<VertexSet> small_cover(const Graph& g, const VertexSet& s) {
  auto parts = components(g, s);
  if (std::all_of(parts.begin(), parts.end(), [&](const VertexSet& p) { return g.is_clique(p); })) return parts;
  return cover_bound(g, s, 24).cover;
}

}  // namespace

HubDivision hub_division(const Graph& g, const WeightFunction& w, const Budget& budget) {
  HubDivision hd;
  Transcript& t = hd.transcript;
  EliminationOrder eo = elimination_order(g, budget);
  hd.order = eo.hub_order;
  hd.certificates = eo.hub_certificates;
  hd.hubs = eo.hubs;
  hd.unbalanced = balanced_vertices(g, w).unbalanced;
  const int ell = static_cast<int>(hd.order.size());
  while (hd.prefix < ell && hd.unbalanced.contains(hd.order[hd.prefix])) ++hd.prefix;
  VertexSet prefix(g.n());
  for (int i = 0; i < hd.prefix; ++i) prefix.insert(hd.order[i]);

  hd.relation = leq_a(g, w, prefix);
  hd.m_set = hd.relation.minimal;
  std::vector<StarSeparation> revised;
  try {
    revised = revised_collection(g, w, hd.m_set);
  } catch (const PropertyViolation& e) {
    require_claim(t, "revised-properties", false, e.what());
  }
  t.push_back({"revised-properties", true, std::to_string(revised.size()) + " separations"});
  // Anchor order: M in elimination order.
  for (Vertex v : hd.order)
    for (const auto& r : revised)
      if (r.v == v) hd.collection.members.push_back(r);

  const SmoothReport smooth = smooth_check(g, w, hd.collection);
  require_claim(t, "smooth", smooth.ok,
                smooth.ok ? "" : smooth.violations.front().first + ": " + smooth.violations.front().second);
  hd.bag = central_bag(g, w, hd.collection);
  require_claim(t, "minimal-in-bag", hd.m_set.is_subset_of(hd.bag.bag));

  HubSet bag_hubs = hub_set(g, hd.bag.bag, budget);
  if (!bag_hubs.undetermined.empty()) throw NotFound("hub search in the central bag ran out of budget");
  hd.bag_hubs = bag_hubs.hubs;
  const VertexSet stray = prefix & hd.bag_hubs;
  require_claim(t, "prefix-not-bag-hub", stray.empty(),
                stray.empty() ? "" : "vertex " + g.label(stray.first()) + " is a hub of the bag");

  if (!hd.all_hubs_unbalanced()) {
    const Vertex vm = hd.first_balanced_hub();
    require_claim(t, "first-balanced-hub-in-bag", hd.bag.bag.contains(vm), "vertex " + g.label(vm));
    const VertexSet need = g.neighbors(vm) & hd.bag_hubs;
    VertexSet got(g.n());
    int used = 0;
    for (const auto& k : hd.certificates[hd.prefix])
      if (k.intersects(need)) {
        got |= k & need;
        ++used;
      }
    require_claim(t, "first-balanced-hub-cover", need.is_subset_of(got) && used <= 3,
                  std::to_string(used) + " certificate cliques");
  }

  InducedSubgraph bag_graph = g.induced(hd.bag.bag);
  const Detection pyramid = find_structure(bag_graph.graph, StructureKind::pyramid, budget);
  if (pyramid.absent()) {
    std::string worst;
    bool ok = true;
    for (Vertex v : hd.m_set) {
      auto cover = small_cover(g, (g.neighbors(v) & hd.bag.bag) - hd.bag_hubs);
      if (cover.size() > 2 && ok) {
        ok = false;
        worst = "vertex " + g.label(v) + " needs " + std::to_string(cover.size()) + " cliques";
      }
      hd.minimal_covers[v] = std::move(cover);
    }
    require_claim(t, "minimal-neighbourhood-cover", ok, worst);
  } else {
    t.push_back({"minimal-neighbourhood-cover", true, "skipped: the bag contains a pyramid"});
  }

  std::string worst;
  bool ok = true;
  for (int i = 0; i < hd.prefix; ++i) {
    const Vertex x = hd.order[i];
    auto cover = small_cover(g, g.neighbors(x) & hd.bag.bag);
    if (cover.size() > 5 && ok) {
      ok = false;
      worst = "vertex " + g.label(x) + " needs " + std::to_string(cover.size()) + " cliques";
    }
    hd.prefix_covers[x] = std::move(cover);
  }
  require_claim(t, "prefix-neighbourhood-cover", ok, worst);
  return hd;
}

}  // namespace talpha

#include "talpha/separations.hpp"

#include <algorithm>

namespace talpha {

namespace {

const Rational kHalf(1, 2);

std::string set_label(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + g.label(v);
  return out + "}";
}

}  // namespace

bool is_balanced(const Graph& g, const WeightFunction& w, Vertex v) {
  for (const auto& d : components(g, g.all() - g.closed_neighbors(v)))
    if (w.of(d) > kHalf) return false;
  return true;
}

Balance balanced_vertices(const Graph& g, const WeightFunction& w) {
  Balance b{g.empty_set(), g.empty_set()};
  for (Vertex v = 0; v < g.n(); ++v) (is_balanced(g, w, v) ? b.balanced : b.unbalanced).insert(v);
  return b;
}

StarSeparation canonical_star_separation(const Graph& g, const WeightFunction& w, Vertex v) {
  const VertexSet closed = g.closed_neighbors(v);
  const VertexSet* heaviest = nullptr;
  Rational best = -1;
  const auto comps = components(g, g.all() - closed);
  for (const auto& d : comps) {
    Rational x = w.of(d);
    if (x > best) {
      best = x;
      heaviest = &d;
    }
  }
  if (!heaviest || best <= kHalf) throw VertexBalanced("vertex " + g.label(v) + " is balanced");
  StarSeparation s;
  s.v = v;
  s.s.b = *heaviest;
  s.s.c = g.neighbors(v) & g.neighbors(s.s.b);
  s.s.c.insert(v);
  s.s.a = g.all() - s.s.b - s.s.c;
  return s;
}

const StarSeparation& LeqA::sep(Vertex v) const {
  for (const auto& s : seps)
    if (s.v == v) return s;
  throw InvalidInput("vertex is not in the relation's ground set");
}

bool LeqA::leq(Vertex x, Vertex y) const { return x == y || sep(x).s.a.contains(y); }

LeqA leq_a(const Graph& g, const WeightFunction& w, const VertexSet& u) {
  LeqA r;
  r.u = u;
  r.minimal = u;
  for (Vertex v : u) r.seps.push_back(canonical_star_separation(g, w, v));
  for (const auto& sx : r.seps)
    for (Vertex y : u) {
      if (y == sx.v) {
        r.pairs.emplace_back(y, y);
      } else if (sx.s.a.contains(y)) {
        r.pairs.emplace_back(sx.v, y);
        r.minimal.erase(y);
      }
    }
  return r;
}

PosetCheck check_partial_order(const LeqA& r) {
  PosetCheck c;
  auto fail = [&](std::string msg) {
    c.ok = false;
    c.violations.push_back(std::move(msg));
  };
  const auto members = r.u.to_vector();
  for (Vertex x : members) {
    if (!r.leq(x, x)) fail("not reflexive at " + std::to_string(x));
    for (Vertex y : members) {
      if (x != y && r.leq(x, y) && r.leq(y, x))
        fail("not antisymmetric on " + std::to_string(x) + "," + std::to_string(y));
      if (!r.leq(x, y)) continue;
      for (Vertex z : members)
        if (r.leq(y, z) && !r.leq(x, z))
          fail("not transitive on " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
    }
  }
  return c;
}

std::vector<StarSeparation> revised_collection(const Graph& g, const WeightFunction& w, const VertexSet& x) {
  std::vector<StarSeparation> out;
  for (Vertex u : x) {
    const StarSeparation canon = canonical_star_separation(g, w, u);
    StarSeparation r = canon;
    VertexSet others = (x & canon.s.c);
    others.erase(u);
    for (Vertex v : others) r.s.c |= g.neighbors(u) & g.neighbors(v);
    r.s.a = g.all() - r.s.c - r.s.b;
    const std::string at = " for " + g.label(u);
    if (r.s.b != canon.s.b) throw PropertyViolation("B changed" + at);
    if (!canon.s.c.is_subset_of(r.s.c) || !r.s.c.is_subset_of(g.closed_neighbors(u)))
      throw PropertyViolation("C is not between the canonical C and N[u]" + at);
    if (!r.s.a.is_subset_of(canon.s.a)) throw PropertyViolation("A grew" + at);
    if (!(canon.s.a - g.neighbors(u)).is_subset_of(r.s.a))
      throw PropertyViolation("A lost a vertex outside N(u)" + at);
    if (!is_separation(g, r.s).ok) throw PropertyViolation("not a separation" + at);
    out.push_back(std::move(r));
  }
  return out;
}

bool nearly_non_crossing(const Graph& g, const Separation& s1, const Separation& s2) {
  const auto c1 = components(g, s1.a);
  const auto c2 = components(g, s2.a);
  for (const auto& d : components(g, s1.a | s2.a))
    if (std::find(c1.begin(), c1.end(), d) == c1.end() && std::find(c2.begin(), c2.end(), d) == c2.end())
      return false;
  return true;
}

VertexSet SmoothCollection::centres(int n) const {
  VertexSet out(n);
  for (const auto& m : members) out.insert(m.v);
  return out;
}

SmoothReport smooth_check(const Graph& g, const WeightFunction& w, const SmoothCollection& s) {
  SmoothReport r;
  auto fail = [&](const char* clause, std::string msg) {
    r.ok = false;
    r.violations.emplace_back(clause, std::move(msg));
  };
  const VertexSet centres = s.centres(g.n());
  if (centres.size() != static_cast<int>(s.members.size())) fail("centre", "two separations share a centre");
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const auto& m = s.members[i];
    const std::string at = " (centre " + g.label(m.v) + ")";
    if (auto rep = is_separation(g, m.s); !rep.ok) fail("separation", rep.violations.front() + at);
    for (std::size_t j = i + 1; j < s.members.size(); ++j)
      if (!nearly_non_crossing(g, m.s, s.members[j].s))
        fail("non-crossing", "separations at " + g.label(m.v) + " and " + g.label(s.members[j].v) + " cross");
    if (!m.s.c.contains(m.v) || !m.s.c.is_subset_of(g.closed_neighbors(m.v))) fail("centre", "C not in N[v]" + at);
    if (is_balanced(g, w, m.v)) {
      fail("centre", "centre is balanced" + at);
    } else if (!m.s.a.is_subset_of(canonical_star_separation(g, w, m.v).s.a)) {
      fail("centre", "A is not inside the canonical A" + at);
    }
    if (m.s.a.intersects(centres))
      fail("centres-outside-A", "A contains centre " + g.label((m.s.a & centres).first()) + at);
  }
  return r;
}

std::pair<InducedSubgraph, WeightFunction> CentralBag::restricted(const Graph& g) const {
  InducedSubgraph sub = g.induced(bag);
  std::vector<Rational> local;
  for (Vertex v : sub.to_parent) local.push_back(weights[v]);
  return {std::move(sub), WeightFunction(std::move(local))};
}

CentralBag central_bag(const Graph& g, const WeightFunction& w, const SmoothCollection& s) {
  if (auto rep = smooth_check(g, w, s); !rep.ok)
    throw NotSmooth(rep.violations.front().first + ": " + rep.violations.front().second);
  CentralBag cb;
  cb.bag = g.all();
  for (const auto& m : s.members) cb.bag &= m.s.b | m.s.c;
  cb.weights = w.values();
  for (Vertex v : g.all() - cb.bag) cb.weights[v] = 0;
  cb.a_star.assign(s.members.size(), g.empty_set());
  for (const auto& d : components(g, g.all() - cb.bag)) {
    int anchor = -1;
    for (std::size_t i = 0; i < s.members.size() && anchor < 0; ++i)
      if (d.is_subset_of(s.members[i].s.a)) anchor = static_cast<int>(i);
    if (anchor < 0) throw NotSmooth("component " + set_label(g, d) + " lies in no single A side");
    cb.outside.push_back(d);
    cb.anchor.push_back(anchor);
    cb.a_star[anchor] |= d;
    cb.weights[s.members[anchor].v] += w.of(d);
  }
  Rational total = 0;
  for (const auto& x : cb.weights) total += x;
  if (total != 1) throw InternalError("inherited weights do not sum to 1");
  return cb;
}

bool shield_check(const Graph& g, const StarSeparation& s1, const StarSeparation& s2) {
  for (const auto* s : {&s1, &s2}) {
    const std::string at = " (centre " + g.label(s->v) + ")";
    if (auto rep = is_separation(g, s->s); !rep.ok) throw PreconditionViolated(rep.violations.front() + at);
    if (!s->s.c.contains(s->v) || !s->s.c.is_subset_of(g.closed_neighbors(s->v)))
      throw PreconditionViolated("not a star separation" + at);
    if (!is_connected(g, s->s.b) || s->s.b.empty()) throw PreconditionViolated("B is not connected" + at);
    VertexSet rim = s->s.c;
    rim.erase(s->v);
    if (g.neighbors(s->s.b) != rim) throw PreconditionViolated("N(B) differs from C minus the centre" + at);
  }
  return (s1.s.b | s1.s.c).is_subset_of(s2.s.b | s2.s.c);
}

}  // namespace talpha

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "talpha/balsep.hpp"
#include "talpha/gen.hpp"
#include "talpha/treedec.hpp"

using namespace talpha;

namespace {

const Rational kHalf(1, 2);

std::vector<Vertex> iota(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

bool has_axiom(const TdValidation& v, int axiom) {
  for (const auto& x : v.violations)
    if (x.axiom == axiom) return true;
  return false;
}

// Fewest-cliques separator search, failing when more than `limit` cliques are needed.
SeparatorOracle clique_union_oracle(int limit) {
  return [limit](const Graph& g, const WeightFunction& w) {
    if (auto s = clique_union_balanced_separator(g, w, kHalf, limit)) return *s;
    throw OracleFailure("no separator within " + std::to_string(limit) + " cliques", limit + 1);
  };
}

TreeDecomposition chain(int n, const std::vector<VertexSet>& bags) {
  TreeDecomposition td;
  td.n = n;
  for (const auto& b : bags) td.add_bag(b);
  for (int i = 0; i + 1 < td.size(); ++i) td.add_edge(i, i + 1);
  return td;
}

}  // namespace

TEST_CASE("validation and statistics of small decompositions") {
  const Graph c9 = hole(9);
  const TreeDecomposition fan = hole_fan(9, iota(9));
  CHECK(validate_td(c9, fan).ok);
  const TdStats s = td_stats(c9, fan);
  CHECK(s.width == 2);
  CHECK(s.independence == 2);
  CHECK(s.cover == 2);
  CHECK(s.cover_exact);

  const Graph k5 = clique(5);
  const TdStats k = td_stats(k5, single_bag(k5));
  CHECK(k.width == 4);
  CHECK(k.independence == 1);
  CHECK(k.cover == 1);

  const Graph p3 = oracle::path(3);
  const TdValidation missing_vertex = validate_td(p3, chain(3, {p3.set({0, 1})}));
  CHECK(has_axiom(missing_vertex, 1));
  const TdValidation missing_edge = validate_td(p3, chain(3, {p3.set({0, 1}), p3.set({2})}));
  CHECK_FALSE(missing_edge.ok);
  CHECK(has_axiom(missing_edge, 2));
  CHECK_FALSE(has_axiom(missing_edge, 1));
  const TdValidation split = validate_td(p3, chain(3, {p3.set({0, 1}), p3.set({0}), p3.set({1, 2})}));
  CHECK(has_axiom(split, 3));

  TreeDecomposition cyclic = chain(3, {p3.set({0, 1}), p3.set({1}), p3.set({1, 2})});
  cyclic.add_edge(2, 0);
  CHECK(has_axiom(validate_td(p3, cyclic), 0));
  TreeDecomposition forest = chain(3, {p3.set({0, 1}), p3.set({1, 2})});
  forest.edges.clear();
  CHECK(has_axiom(validate_td(p3, forest), 0));
}

TEST_CASE("fan decompositions of holes") {
  for (int n = 4; n <= 12; ++n) {
    const Graph h = hole(n);
    const TreeDecomposition td = hole_fan(n, iota(n));
    CHECK(validate_td(h, td).ok);
    CHECK(td_stats(h, td).cover <= 2);
  }
}

TEST_CASE("wheel-free decompositions") {
  CHECK(validate_td(clique(6), wheel_free_decomposition(clique(6))).ok);
  CHECK_THROWS_AS(wheel_free_decomposition(wheel(9, {1, 4, 7})), NotInClass);
  int built = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_wheel_free(6 + static_cast<int>(seed % 18), seed);
    if (!g) continue;
    ++built;
    const TreeDecomposition td = wheel_free_decomposition(*g);
    CHECK(validate_td(*g, td).ok);
    CHECK(td_stats(*g, td).cover <= 2);
  }
  CHECK(built >= 30);
}

TEST_CASE("composition over atoms") {
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const AtomTree atoms = atom_decomposition(bowtie);
  REQUIRE(atoms.atoms.size() == 2);
  std::vector<TreeDecomposition> parts;
  for (const auto& a : atoms.atoms) {
    TreeDecomposition p;
    p.n = 5;
    p.add_bag(a.vertices);
    parts.push_back(p);
  }
  const Composition c = compose_td_over_atoms(bowtie, atoms, parts);
  CHECK(validate_td(bowtie, c.td).ok);
  CHECK(c.repaired.empty());
  CHECK(td_stats(bowtie, c.td).independence == 1);

  // A part with no bag holding its cut edge gets one added.
  const Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
  const AtomTree ha = atom_decomposition(house);
  REQUIRE(ha.atoms.size() == 2);
  std::vector<TreeDecomposition> hparts;
  for (const auto& a : ha.atoms) {
    TreeDecomposition p;
    p.n = 5;
    for (Vertex v : a.vertices) p.add_bag(house.set({v}));
    for (int i = 0; i + 1 < p.size(); ++i) p.add_edge(i, i + 1);
    hparts.push_back(p);
  }
  const Composition repaired = compose_td_over_atoms(house, ha, hparts);
  CHECK_FALSE(repaired.repaired.empty());
}

TEST_CASE("bound on carried covers") {
  CHECK(g_bound(1) == 11);
  CHECK(g_bound(2) == 38);
  CHECK(g_bound(9) == 675);
}

TEST_CASE("separator recursion") {
  const Graph k5 = clique(5);
  BuildReport kr;
  const TreeDecomposition kt = build_td(k5, clique_union_oracle(2), 1, &kr);
  CHECK(kt.size() == 1);
  CHECK(kr.oracle_calls == 0);

  const Graph c19 = hole(19);
  BuildReport r;
  const TreeDecomposition td = build_td(c19, clique_union_oracle(2), 2, &r);
  CHECK(validate_td(c19, td).ok);
  CHECK(r.oracle_calls > 0);
  CHECK(r.max_oracle_cover <= 2);
  CHECK(r.guard_hits == 0);
  const TdStats s = td_stats(c19, td);
  CHECK(s.cover <= g_bound(2));
  CHECK(s.independence <= 8);

  CHECK_THROWS_AS(build_td(c19, clique_union_oracle(1), 2, nullptr), OracleFailure);
  try {
    build_td(c19, clique_union_oracle(19), 1, nullptr);
    FAIL("expected the oracle cover to exceed k");
  } catch (const OracleFailure& e) {
    CHECK(e.cover() == 2);
  }
}

TEST_CASE("separator recursion with the full oracle") {
  for (int n : {13, 17, 21}) {
    const Graph h = hole(n);
    BuildReport r;
    const TreeDecomposition td = build_td(h, [](const Graph& g, const WeightFunction& w) {
      return weighted_separator_oracle(g, w);
    }, 2, &r);
    CHECK(validate_td(h, td).ok);
    CHECK(td_stats(h, td).cover <= g_bound(2));
  }
}

TEST_CASE("exact tree-independence number") {
  CHECK(ta_exact_small(oracle::cycle(5)) == 2);
  CHECK(ta_exact_small(clique(4)) == 1);
  const Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(ta_exact_small(k23) == 2);
  CHECK(ta_exact_small(Graph(0)) == 0);
  CHECK(ta_exact_small(Graph(4)) == 1);
  CHECK_THROWS_AS(ta_exact_small(hole(11)), TooLarge);
  CHECK(ta_exact_small(hole(11), 12) == 2);

  oracle::Rng rng(5);
  int compared = 0;
  for (int round = 0; round < 400 && compared < 80; ++round) {
    const int n = 4 + rng.below(4);
    const Graph g = oracle::random_graph(n, 0.65, rng);
    if (n * (n - 1) / 2 - g.m() > 13) continue;
    ++compared;
    CHECK(ta_exact_small(g) == oracle::tree_alpha(g));
  }
  CHECK(compared == 80);
  for (int round = 0; round < 40; ++round) {
    const int n = 5 + rng.below(5);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const bool chordal = oracle::chordal(oracle::AdjMasks(g), (oracle::Mask{1} << n) - 1);
    CHECK((ta_exact_small(g) <= 1) == chordal);
  }
}

TEST_CASE("pipeline on fixtures") {
  const PipelineResult c9 = ta_pipeline(hole(9));
  CHECK(validate_td(hole(9), c9.td).ok);
  CHECK(c9.stats.width == 2);
  CHECK(c9.stats.independence == 2);
  CHECK(c9.stats.cover == 2);
  REQUIRE(c9.atoms.size() == 1);
  CHECK(c9.atoms[0].route == "hole");

  const PipelineResult k = ta_pipeline(clique(6));
  CHECK(k.td.size() == 1);
  CHECK(k.atoms[0].route == "complete");

  const Graph w9 = wheel(9, {1, 4, 7});
  const PipelineResult w = ta_pipeline(w9);
  CHECK(validate_td(w9, w.td).ok);
  CHECK(w.stats.independence >= ta_exact_small(w9));

  const PipelineResult empty = ta_pipeline(Graph(3));
  CHECK(validate_td(Graph(3), empty.td).ok);
  CHECK(empty.stats.independence == 1);
}

TEST_CASE("pipeline over the corpus") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 60 && seed < 400; ++seed) {
    const auto g = gen_class_c_mixed(6 + static_cast<int>(seed % 16), seed);
    if (!g) continue;
    ++checked;
    const PipelineResult r = ta_pipeline(*g);
    const TdValidation v = validate_td(*g, r.td);
    CHECK(v.ok);
    CHECK(r.repaired.empty());
    const int ind = r.stats.independence;
    CHECK(ind <= r.stats.cover);
    CHECK(r.stats.cover <= ind * (ind + 1) / 2);
    if (g->n() <= 10) CHECK(ind >= ta_exact_small(*g));
    for (const auto& c : r.assertions) CHECK(c.ok);
  }
  CHECK(checked == 60);
}

TEST_CASE("decomposition files") {
  const TreeDecomposition fan = hole_fan(6, iota(6));
  std::stringstream out;
  write_td(out, fan);
  CHECK(out.str().rfind("s td 4 3 6\n", 0) == 0);
  std::stringstream in(out.str());
  const TreeDecomposition back = read_td(in);
  CHECK(back.n == 6);
  CHECK(back.bags == fan.bags);
  CHECK(back.edges.size() == fan.edges.size());
  CHECK(validate_td(hole(6), back).ok);

  std::stringstream comment("c a comment\ns td 1 2 2\nb 1 1 2\n");
  CHECK(read_td(comment).size() == 1);
  std::stringstream no_header("b 1 1 2\n");
  CHECK_THROWS_AS(read_td(no_header), InvalidInput);
  std::stringstream bad_vertex("s td 1 2 2\nb 1 1 3\n");
  CHECK_THROWS_AS(read_td(bad_vertex), InvalidInput);
  std::stringstream bad_node("s td 1 2 2\nb 1 1 2\n1 2\n");
  CHECK_THROWS_AS(read_td(bad_node), InvalidInput);
}

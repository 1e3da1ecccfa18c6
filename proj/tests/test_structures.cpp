#include "doctest.h"
#include "oracles.hpp"
#include "talpha/structures.hpp"

using namespace talpha;

namespace {

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
Graph prism6() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }
Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace

TEST_CASE("theta in K23") {
  Graph g = k23();
  auto d = find_structure(g, StructureKind::theta);
  REQUIRE(d.found());
  CHECK(d.witness->anchors == std::vector<Vertex>{0, 1});
  for (const auto& p : d.witness->paths) CHECK(p.size() == 3);
  CHECK_FALSE(verify_witness(g, *d.witness));
}

TEST_CASE("prism on six vertices") {
  Graph g = prism6();
  auto d = find_structure(g, StructureKind::prism);
  REQUIRE(d.found());
  for (const auto& p : d.witness->paths) CHECK(p.size() == 2);
  CHECK(find_structure(g, StructureKind::theta).absent());
  CHECK(find_structure(g, StructureKind::pyramid).absent());
}

TEST_CASE("no C4 in C7") {
  auto d = find_structure(oracle::cycle(7), StructureKind::c4);
  CHECK(d.absent());
  CHECK_FALSE(d.witness);
}

TEST_CASE("wheel filters") {
  Graph even = oracle::wheel(6, {0, 1, 3, 4});
  auto d = find_wheel(even, WheelFilter::even);
  REQUIRE(d.found());
  CHECK(d.witness->flags.even);
  CHECK(d.witness->anchors[0] == 6);
  CHECK(d.witness->flags.spokes == 4);

  Graph bug = oracle::wheel(5, {0, 1, 3});
  auto b = find_wheel(bug, WheelFilter::any);
  REQUIRE(b.found());
  CHECK(b.witness->flags.bug);
  CHECK(b.witness->flags.spokes == 3);

  Graph universal = oracle::wheel(5, {0, 1, 2, 3, 4});
  CHECK(find_wheel(universal, WheelFilter::proper).absent());
  auto u = find_wheel(universal, WheelFilter::any);
  REQUIRE(u.found());
  CHECK(u.witness->flags.universal);
}

TEST_CASE("hole enumeration on small graphs") {
  CHECK(enumerate_holes(oracle::cycle(6)).holes.size() == 1);
  CHECK(enumerate_holes(oracle::complete(4)).holes.empty());
  Graph p = prism6();
  auto holes = enumerate_holes(p);
  CHECK(holes.holes.size() == 3);
  CHECK(holes.holes.size() == oracle::holes(p).size());
  for (const auto& h : holes.holes) CHECK(h.size() == 4);
}

TEST_CASE("hole budget is reported as truncation") {
  Budget tight;
  tight.max_holes = 2;
  auto holes = enumerate_holes(prism6(), tight);
  CHECK(holes.truncated);
  auto d = find_structure(oracle::cycle(9), StructureKind::theta, tight);
  CHECK(d.absent());  // a single hole fits the budget
  Budget none;
  none.max_holes = 0;
  CHECK(find_structure(oracle::cycle(9), StructureKind::theta, none).status == SearchStatus::unknown);
  CHECK(check_class(oracle::cycle(9), none).c == Verdict::unknown);
}

TEST_CASE("hub sets") {
  Graph even = oracle::wheel(6, {0, 1, 3, 4});
  auto hs = hub_set(even, even.all());
  CHECK(hs.hubs == even.set({6}));
  REQUIRE(hs.witnesses.count(6) == 1);
  CHECK_FALSE(hs.witnesses.at(6).flags.bug);
  CHECK(hub_set(oracle::cycle(7), oracle::cycle(7).all()).hubs.empty());
  Graph bug = oracle::wheel(5, {0, 1, 3});
  CHECK(hub_set(bug, bug.all()).hubs.empty());
  // The hole must lie inside X.
  CHECK(hub_set(even, even.set({0, 1, 2, 3, 6})).hubs.empty());
}

TEST_CASE("class membership") {
  auto c7 = check_class(oracle::cycle(7));
  CHECK(c7.c == Verdict::in);
  CHECK(c7.c_star == Verdict::in);
  auto t = check_class(k23());
  CHECK(t.c == Verdict::out);
  REQUIRE(t.witness);
  // K23 contains a C4, which the direct checks see first.
  CHECK(t.witness->kind == StructureKind::c4);
  // A pyramid is excluded from C but allowed in C*.
  Graph pyr(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {2, 4}, {4, 6}, {2, 6}, {5, 6}});
  REQUIRE(oracle::has_pyramid(pyr));
  auto r = check_class(pyr);
  CHECK(r.c == Verdict::out);
  CHECK(r.witness->kind == StructureKind::pyramid);
  CHECK(r.c_star == (oracle::in_class_c_star(pyr) ? Verdict::in : Verdict::out));
}

TEST_CASE("Petersen graph verdict is settled exhaustively") {
  Graph g = petersen();
  auto r = check_class(g);
  CHECK(r.c == (oracle::in_class_c(g) ? Verdict::in : Verdict::out));
  CHECK(r.c_star == (oracle::in_class_c_star(g) ? Verdict::in : Verdict::out));
  // Regression fixture: the Petersen graph contains a theta.
  CHECK(r.c == Verdict::out);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == StructureKind::theta);
}

TEST_CASE("detectors agree with definition-level search") {
  oracle::Rng rng(21);
  for (int round = 0; round < 500; ++round) {
    const int n = 4 + rng.below(9);
    const double p = 0.15 + 0.05 * rng.below(8);
    Graph g = oracle::random_graph(n, p, rng);
    CAPTURE(round);
    CAPTURE(g.edges());
    CHECK(find_structure(g, StructureKind::c4).found() == oracle::has_c4(g));
    CHECK(find_structure(g, StructureKind::diamond).found() == oracle::has_diamond(g));
    CHECK(find_structure(g, StructureKind::theta).found() == oracle::has_theta(g));
    CHECK(find_structure(g, StructureKind::pyramid).found() == oracle::has_pyramid(g));
    CHECK(find_structure(g, StructureKind::prism).found() == oracle::has_prism(g));
    CHECK(find_wheel(g, WheelFilter::any).found() == oracle::has_wheel(g, [](auto&) { return true; }));
    CHECK(find_wheel(g, WheelFilter::even).found() == oracle::has_even_wheel(g));
    CHECK(find_wheel(g, WheelFilter::non_bug).found() ==
          oracle::has_wheel(g, [](const oracle::WheelShape& s) { return !oracle::is_bug(s); }));
    CHECK(find_wheel(g, WheelFilter::proper).found() == oracle::has_wheel(g, [](const oracle::WheelShape& s) {
      return !oracle::is_bug(s) && !oracle::is_twin(s) && !s.universal;
    }));
    auto holes = enumerate_holes(g);
    auto expected = oracle::holes(g);
    sort_canonical(holes.holes);
    sort_canonical(expected);
    CHECK(holes.holes == expected);
    CHECK(hub_set(g, g.all()).hubs == oracle::hubs(g, g.all()));
    auto r = check_class(g);
    CHECK((r.c == Verdict::in) == oracle::in_class_c(g));
    CHECK((r.c_star == Verdict::in) == oracle::in_class_c_star(g));
  }
}

TEST_CASE("adjacent vertices attached to a hole share a neighbour on it") {
  oracle::Rng rng(22);
  int graphs = 0, pairs = 0;
  while (graphs < 300) {
    const int n = 6 + rng.below(9);
    Graph g = oracle::random_graph(n, 0.2 + 0.05 * rng.below(4), rng);
    if (find_structure(g, StructureKind::theta).found() || find_wheel(g, WheelFilter::even).found()) continue;
    ++graphs;
    for (const auto& h : enumerate_holes(g).holes) {
      auto attached = [&](Vertex v) { return !h.contains(v) && !g.is_clique(g.neighbors(v) & h); };
      for (auto [v1, v2] : g.edges()) {
        if (!attached(v1) || !attached(v2)) continue;
        ++pairs;
        CHECK((g.neighbors(v1) & g.neighbors(v2)).intersects(h));
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("minimal connector outcomes") {
  // Star centre 3 with leaves 0, 1, 2.
  Graph star(4, {{0, 3}, {1, 3}, {2, 3}});
  auto s = classify_minimal_connector(star, 0, 1, 2);
  CHECK(s.outcome == ConnectorClass::Outcome::center);
  CHECK(s.h == star.set({3}));
  for (const auto& p : s.paths) CHECK(p.size() == 2);

  // Triangle 3,4,5 with 3-0, 4-1, 5-2.
  Graph tri(6, {{3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  auto t = classify_minimal_connector(tri, 0, 1, 2);
  CHECK(t.outcome == ConnectorClass::Outcome::triangle);
  CHECK(t.h == tri.set({3, 4, 5}));

  // Path 0-3-4-1 with 2 adjacent to 3 and 4.
  Graph pq(5, {{0, 3}, {3, 4}, {4, 1}, {2, 3}, {2, 4}});
  auto c = classify_minimal_connector(pq, 0, 1, 2);
  CHECK(c.outcome == ConnectorClass::Outcome::path_or_hole);
  CHECK(c.roles[2] == 2);
  CHECK((pq.neighbors(2) & c.h).size() == 2);

  Graph split(4, {{0, 3}, {1, 3}});
  CHECK_THROWS_AS(classify_minimal_connector(split, 0, 1, 2), NoConnector);
}

TEST_CASE("minimal connectors are minimal and verified") {
  oracle::Rng rng(23);
  int done = 0;
  while (done < 400) {
    const int n = 5 + rng.below(12);
    Graph g = oracle::random_graph(n, 0.15 + 0.05 * rng.below(5), rng);
    Vertex x1 = rng.below(n), x2 = rng.below(n), x3 = rng.below(n);
    if (x1 == x2 || x1 == x3 || x2 == x3) continue;
    ConnectorClass c;
    try {
      c = classify_minimal_connector(g, x1, x2, x3);
    } catch (const NoConnector&) {
      continue;
    }
    ++done;
    CHECK_FALSE(verify_connector(g, {x1, x2, x3}, c));
    for (Vertex v : c.h) {
      VertexSet smaller = c.h;
      smaller.erase(v);
      const bool still = !smaller.empty() && is_connected(g, smaller) && g.neighbors(x1).intersects(smaller) &&
                         g.neighbors(x2).intersects(smaller) && g.neighbors(x3).intersects(smaller);
      CHECK_FALSE(still);
    }
  }
}

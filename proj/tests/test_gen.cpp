#include "doctest.h"
#include "oracles.hpp"
#include "talpha/cover.hpp"
#include "talpha/gen.hpp"
#include "talpha/structures.hpp"
#include "talpha/treedec.hpp"

using namespace talpha;

namespace {

bool any_wheel(const Graph& g) {
  return oracle::has_wheel(g, [](const oracle::WheelShape&) { return true; });
}

}  // namespace

TEST_CASE("named families") {
  const Graph c7 = gen_family("hole", {7});
  CHECK(c7.n() == 7);
  CHECK(c7.m() == 7);
  CHECK(oracle::holes(c7).size() == 1);

  const Graph ew = gen_family("wheel", {6, 1, 2, 4, 5});
  CHECK(ew.n() == 7);
  CHECK(find_wheel(ew, WheelFilter::even).found());
  CHECK(oracle::has_even_wheel(ew));
  CHECK(check_class(ew).c == Verdict::out);

  CHECK(find_structure(gen_family("theta", {2, 3, 3}), StructureKind::theta).found());
  CHECK(find_structure(gen_family("pyramid", {1, 2, 2}), StructureKind::pyramid).found());
  CHECK(find_structure(gen_family("prism", {1, 1, 2}), StructureKind::prism).found());
  CHECK(oracle::has_theta(gen_family("theta", {})));
  CHECK(oracle::has_pyramid(gen_family("pyramid", {})));
  CHECK(oracle::has_prism(gen_family("prism", {})));
  CHECK(gen_family("clique", {5}).m() == 10);

  CHECK_THROWS_AS(gen_family("theta", {1, 1, 1}), BadParams);
  CHECK_THROWS_AS(gen_family("pyramid", {1, 1, 2}), BadParams);
  CHECK_THROWS_AS(gen_family("wheel", {6, 1, 2}), BadParams);
  CHECK_THROWS_AS(gen_family("hole", {}), BadParams);
  CHECK_THROWS_AS(gen_family("nonsense", {}), BadParams);
}

TEST_CASE("gap construction") {
  const Graph m4 = mycielski(4);
  CHECK(m4.n() == 11);
  CHECK(m4.m() == 20);
  CHECK(clique_number(m4, m4.all()) == 2);
  // Chromatic number 4: the complement needs four cliques.
  CHECK(clique_cover_number(m4.complement(), m4.all()) == 4);

  const Graph gap = gen_family("ta_tc_gap", {4});
  CHECK(gap.n() == 22);
  CHECK(independence_number(gap) == 2);
  CHECK(td_stats(gap, single_bag(gap)).independence == 2);
  const InducedSubgraph half = gap.induced(VertexSet::prefix(22, 11));
  CHECK(clique_cover_number(half.graph, half.graph.all()) == 4);
  for (Vertex u = 0; u < 11; ++u)
    for (Vertex v = 11; v < 22; ++v) CHECK(gap.adjacent(u, v));
}

TEST_CASE("random class-C graphs") {
  const auto low = gen_random_class_c(8, 0.15, 1);
  REQUIRE(low.has_value());
  CHECK(oracle::in_class_c(*low));
  const auto empty = gen_random_class_c(0, 0.5, 1);
  REQUIRE(empty.has_value());
  CHECK(empty->n() == 0);
  if (const auto dense = gen_random_class_c(5, 0.9, 3)) CHECK(oracle::in_class_c(*dense));

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto a = gen_random_class_c(10, 0.25, seed);
    const auto b = gen_random_class_c(10, 0.25, seed);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    CHECK(a->edges() == b->edges());
    CHECK(oracle::in_class_c(*a));
  }
}

TEST_CASE("grown graphs stay in the class without clique cutsets") {
  int built = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6 + static_cast<int>(seed % 8);
    const auto g = grow_class_c_nc(n, seed);
    if (!g) continue;
    ++built;
    CHECK(g->n() == n);
    CHECK(oracle::in_class_c(*g));
    CHECK(oracle::clique_cutsets(*g).empty());
  }
  CHECK(built >= 15);
}

TEST_CASE("mixed and wheel-free corpora") {
  int mixed = 0, wheel_free = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    if (const auto g = gen_class_c_mixed(n, seed)) {
      ++mixed;
      CHECK(g->n() == n);
      CHECK(oracle::in_class_c(*g));
      const auto again = gen_class_c_mixed(n, seed);
      CHECK(again->edges() == g->edges());
    }
    if (const auto g = gen_wheel_free(n, seed)) {
      ++wheel_free;
      CHECK(g->n() == n);
      CHECK(oracle::in_class_c(*g));
      CHECK_FALSE(any_wheel(*g));
      CHECK_FALSE(oracle::has_theta(*g));
      CHECK_FALSE(oracle::has_prism(*g));
      CHECK_FALSE(oracle::has_pyramid(*g));
    }
  }
  CHECK(mixed >= 20);
  CHECK(wheel_free >= 30);
}

TEST_CASE("clique sums") {
  const CliqueSum vertex = compose_clique_sum(clique(3), clique(3), {0}, {0});
  REQUIRE(vertex.graph.has_value());
  CHECK(vertex.graph->n() == 5);
  CHECK(oracle::in_class_c(*vertex.graph));

  const CliqueSum edge = compose_clique_sum(clique(3), clique(3), {0, 1}, {0, 1});
  CHECK_FALSE(edge.graph.has_value());
  REQUIRE(edge.witness.has_value());
  CHECK(edge.witness->kind == StructureKind::diamond);

  const CliqueSum holes = compose_clique_sum(hole(5), hole(5), {0}, {2});
  REQUIRE(holes.graph.has_value());
  CHECK(holes.graph->n() == 9);
  CHECK(oracle::in_class_c(*holes.graph));

  CHECK_THROWS_AS(compose_clique_sum(clique(3), clique(3), {0, 1}, {0}), BadParams);
  CHECK_THROWS_AS(compose_clique_sum(hole(5), clique(3), {0, 2}, {0, 1}), BadParams);
}

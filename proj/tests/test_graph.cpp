#include <doctest.h>

#include <random>

#include "bcr/graph.hpp"
#include "bcr/solver.hpp"
#include "support/generators.hpp"

using namespace bcr;
using namespace bcr::testing;

TEST_CASE("build_graph validates its input") {
  const BipartiteGraph c = build_graph(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  CHECK(c.edge_count() == 4);
  CHECK(c.degree(Side::X, 0) == 2);
  CHECK(c.has_edge(1, 0));

  const BipartiteGraph star = complete(1, 5);
  CHECK(star.x_count() == 1);
  CHECK(star.y_count() == 5);
  CHECK(star.degree(Side::X, 0) == 5);

  SUBCASE("duplicate edge names both endpoints") {
    try {
      build_graph(1, 1, {{0, 0, 1}, {0, 0, 1}});
      FAIL("expected GraphError");
    } catch (const GraphError& e) {
      CHECK(std::string(e.what()).find("(x0, y0)") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(build_graph(1, 1, {{0, 1, 1}}), GraphError);
  CHECK_THROWS_AS(build_graph(1, 1, {{1, 0, 1}}), GraphError);
  CHECK_THROWS_AS(build_graph(1, 1, {{0, 0, 0}}), GraphError);
}

TEST_CASE("adjacency is sorted and queryable") {
  const BipartiteGraph g = build_graph(2, 3, {{1, 2, 1}, {0, 2, 1}, {1, 0, 4}, {0, 1, 1}});
  const auto adj = g.neighbors(Side::Y, 2);
  REQUIRE(adj.size() == 2);
  CHECK(adj[0].other == 0);
  CHECK(adj[1].other == 1);
  CHECK(g.edge(g.find_edge(1, 0)).weight == 4);
  CHECK(g.find_edge(0, 0) == BipartiteGraph::npos);
  CHECK(g.is_leaf_edge_weighted());
  CHECK_FALSE(build_graph(2, 2, {{0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}).is_leaf_edge_weighted());
}

TEST_CASE("connected_components") {
  SUBCASE("two disjoint edges") {
    const auto comps = connected_components(make_graph(2, 2, {{0, 0}, {1, 1}}));
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
      CHECK(c.graph.edge_count() == 1);
      CHECK(c.graph.x_count() == 1);
    }
    CHECK(comps[0].x_origin == std::vector<std::uint32_t>{0});
    CHECK(comps[1].y_origin == std::vector<std::uint32_t>{1});
  }
  SUBCASE("connected input is returned unchanged") {
    const auto comps = connected_components(c4());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].graph == c4());
  }
  SUBCASE("star plus isolated Y vertex") {
    const auto comps = connected_components(make_graph(1, 4, {{0, 0}, {0, 1}, {0, 2}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph == complete(1, 3));
    CHECK(comps[1].graph.x_count() == 0);
    CHECK(comps[1].graph.y_count() == 1);
    CHECK(comps[1].y_origin == std::vector<std::uint32_t>{3});
  }
  SUBCASE("ordering by smallest X index") {
    // component of x1 comes first only if it holds x0; here x0 sits with y2
    const auto comps = connected_components(make_graph(2, 3, {{1, 0}, {0, 2}}));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].x_origin == std::vector<std::uint32_t>{0});
    CHECK(comps[1].x_origin == std::vector<std::uint32_t>{1});
    CHECK(comps[2].y_origin == std::vector<std::uint32_t>{1});
  }
}

TEST_CASE("connected_components partitions vertices and edges") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const BipartiteGraph g = disjoint_union(random_small_connected(rng, 6, 3), random_small_connected(rng, 6, 3));
    const auto comps = connected_components(g);
    std::vector<int> seen_x(g.x_count()), seen_y(g.y_count());
    std::vector<Edge> rebuilt;
    for (const auto& c : comps) {
      CHECK(is_connected(c.graph));
      for (auto v : c.x_origin) ++seen_x[v];
      for (auto v : c.y_origin) ++seen_y[v];
      for (const Edge& e : c.graph.edges()) rebuilt.push_back(Edge{c.x_origin[e.x], c.y_origin[e.y], e.weight});
    }
    CHECK(std::all_of(seen_x.begin(), seen_x.end(), [](int c) { return c == 1; }));
    CHECK(std::all_of(seen_y.begin(), seen_y.end(), [](int c) { return c == 1; }));
    CHECK(BipartiteGraph(static_cast<std::uint32_t>(g.x_count()), static_cast<std::uint32_t>(g.y_count()),
                         rebuilt) == g);
  }
}

TEST_CASE("find_sibling_pairs") {
  CHECK(find_sibling_pairs(complete(1, 5)).size() == 10);
  CHECK(find_sibling_pairs(c4()).empty());
  // x0 - y0 - x1: both X leaves hang off y0
  const auto pairs = find_sibling_pairs(path_graph(3));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].leaf_a == VertexId{Side::X, 0});
  CHECK(pairs[0].leaf_b == VertexId{Side::X, 1});
  CHECK(pairs[0].parent == VertexId{Side::Y, 0});
}

TEST_CASE("merge_sibling_leaves") {
  SUBCASE("star collapses to one weighted edge") {
    const ReducedGraph r = merge_sibling_leaves(complete(1, 5));
    CHECK(r.graph == build_graph(1, 1, {{0, 0, 5}}));
    CHECK(r.y_members[0] == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  }
  SUBCASE("no siblings, no change") { CHECK(merge_sibling_leaves(c4()).graph == c4()); }
  SUBCASE("weighted leaves are summed") {
    // x0 with leaves y0 (2), y1 (3) and the non-leaf y2 shared with x1
    const BipartiteGraph g = build_graph(2, 3, {{0, 0, 2}, {0, 1, 3}, {0, 2, 1}, {1, 2, 1}});
    const ReducedGraph r = merge_sibling_leaves(g);
    CHECK(r.graph == build_graph(2, 2, {{0, 0, 5}, {0, 1, 1}, {1, 1, 1}}));
    CHECK(r.graph.is_leaf_edge_weighted());
    CHECK(bcr_bruteforce(g).optimum == bcr_bruteforce(r.graph).optimum);
  }
}

TEST_CASE("merge_sibling_leaves properties on random graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const BipartiteGraph g = add_random_leaves(rng, random_small_connected(rng, 6, 3), 3);
    const ReducedGraph once = merge_sibling_leaves(g);
    CHECK(find_sibling_pairs(once.graph).empty());
    CHECK(once.graph.is_leaf_edge_weighted());
    CHECK(merge_sibling_leaves(once.graph).graph == once.graph);
    Weight before = 0, after = 0;
    for (const Edge& e : g.edges()) before += e.weight;
    for (const Edge& e : once.graph.edges()) after += e.weight;
    CHECK(before == after);  // merging moves weight, never drops it
    if (g.x_count() <= 6 && g.y_count() <= 6) {
      CHECK(bcr_bruteforce(g).optimum == bcr_bruteforce(once.graph).optimum);
    }
  }
}

TEST_CASE("crossing_lower_bound") {
  CHECK(crossing_lower_bound(c4()) == 1);
  CHECK(crossing_lower_bound(complete(3, 3)) == 4);
  CHECK(crossing_lower_bound(path_graph(7)) == 0);
  CHECK(crossing_lower_bound(complete(1, 6)) == 0);
  CHECK(crossing_lower_bound(disjoint_union(c4(), c4())) == 2);
  CHECK(crossing_lower_bound(BipartiteGraph()) == 0);
}

TEST_CASE("is_caterpillar_forest") {
  for (std::uint32_t n = 1; n < 9; ++n) CHECK(is_caterpillar_forest(path_graph(n)));
  CHECK_FALSE(is_caterpillar_forest(c4()));
  // K_{1,3} with every edge subdivided: x0 centre, y0..y2 middles, x1..x3 ends
  const BipartiteGraph spider = make_graph(4, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 1}, {3, 2}});
  CHECK_FALSE(is_caterpillar_forest(spider));
  CHECK(bcr_bruteforce(spider).optimum == 1);
  CHECK(is_caterpillar_forest(disjoint_union(complete(1, 4), path_graph(5))));
  CHECK(is_caterpillar_forest(BipartiteGraph(3, 2, {})));
}

TEST_CASE("small graph invariants against the exhaustive oracle") {
  // Every graph with |X| <= 3, |Y| <= 3 plus random graphs up to 9 vertices.
  auto check = [](const BipartiteGraph& g) {
    const std::uint64_t opt = bcr_bruteforce(g).optimum;
    CHECK(crossing_lower_bound(g) <= opt);
    CHECK(is_caterpillar_forest(g) == (opt == 0));
  };
  for (std::uint32_t nx = 1; nx <= 3; ++nx)
    for (std::uint32_t ny = 1; ny <= 3; ++ny)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nx * ny)); ++mask) check(from_mask(nx, ny, mask));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const BipartiteGraph g = random_small_connected(rng, 9, 4);
    if (g.x_count() <= 6 && g.y_count() <= 6) check(g);
  }
}

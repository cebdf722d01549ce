#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stick/generators.hpp"
#include "stick/graph.hpp"

using namespace stick;

TEST_CASE("parse small graphs") {
  const auto star = parse_graph("p stick 1 2\ne 1 1\ne 1 2\n");
  CHECK(star.a_count() == 1);
  CHECK(star.b_count() == 2);
  CHECK(star.edge_count() == 2);

  const auto k22 = parse_graph("p stick 2 2\ne 1 1\ne 1 2\ne 2 1\ne 2 2\n");
  CHECK(k22.edge_count() == 4);
  CHECK(k22.adjacent(1, 0));

  CHECK_THROWS_AS(parse_graph("p stick 1 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p stick 1 1\np stick 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p stick 1 1\nx 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p stick 1 1\ne 1\n"), ParseError);
}

TEST_CASE("duplicate edges are merged with a warning") {
  std::vector<std::string> warnings;
  const auto g = parse_graph("# two copies\np stick 1 1\ne 1 1\ne 1 1\n", &warnings);
  CHECK(g.edge_count() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto g = oracle::random_graph(1 + round % 5, 1 + round % 4, 0.5, rng);
    CHECK(parse_graph(format_graph(g)) == g);
  }
  const std::vector<std::string> comments{"hello"};
  CHECK(format_graph(BipartiteGraph(0, 0), comments) == "# hello\np stick 0 0\n");
}

TEST_CASE("holes") {
  const auto c6 = gen_even_cycle(6);
  const auto hole = find_hole(c6);
  REQUIRE(hole);
  CHECK(hole->vertices.size() == 6);
  CHECK(hole->vertices.front().side == Side::A);

  CHECK_FALSE(find_hole(gen_random_tree(11, 3)));
  CHECK_FALSE(find_hole(gen_even_cycle(4)));
  CHECK_FALSE(find_hole(gen_py2()));
  CHECK(find_hole(gen_jk(3)));
}

TEST_CASE("hole finder agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 400; ++round) {
    const int n = 2 + round % 4, m = 2 + (round / 4) % 4;
    const auto g = oracle::random_graph(n, m, 0.3 + 0.1 * (round % 4), rng);
    const auto hole = find_hole(g);
    CHECK(hole.has_value() == oracle::has_hole(g));
    if (!hole) continue;
    const auto& cyc = hole->vertices;
    REQUIRE(cyc.size() >= 6);
    for (std::size_t x = 0; x < cyc.size(); ++x)
      for (std::size_t y = x + 1; y < cyc.size(); ++y) {
        const bool consecutive = y == x + 1 || (x == 0 && y == cyc.size() - 1);
        CHECK(g.adjacent(cyc[x], cyc[y]) == consecutive);
      }
  }
}

TEST_CASE("components, complement and forests") {
  const auto two = BipartiteGraph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}});
  CHECK(connected_components(two).size() == 2);
  CHECK(connected_components(gen_even_cycle(4)).size() == 1);
  const auto isolated = BipartiteGraph(2, 1, std::vector<Edge>{{0, 0}});
  const auto comps = connected_components(isolated);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1] == std::vector<Vertex>{{Side::A, 1}});

  CHECK(bipartite_complement(gen_even_cycle(4)).edge_count() == 0);
  CHECK(bipartite_complement(BipartiteGraph(1, 1)).edge_count() == 1);
  const auto p4 = BipartiteGraph(2, 2, std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(bipartite_complement(p4).edges() == std::vector<Edge>{{0, 1}});
  CHECK(bipartite_complement(bipartite_complement(p4)) == p4);

  CHECK(is_forest(gen_random_tree(9, 2)));
  CHECK_FALSE(is_forest(gen_even_cycle(6)));
}

TEST_CASE("side swap and induced subgraphs") {
  const auto g = BipartiteGraph(2, 3, std::vector<Edge>{{0, 2}, {1, 0}});
  const auto s = g.swapped_sides();
  CHECK(s.a_count() == 3);
  CHECK(s.adjacent(2, 0));
  CHECK(s.swapped_sides() == g);
  const std::vector<int> a{1}, b{0, 2};
  const auto sub = induced_subgraph(g, a, b);
  CHECK(sub.edges() == std::vector<Edge>{{0, 0}});
  CHECK_THROWS_AS(BipartiteGraph(1, 1, std::vector<Edge>{{0, 1}}), Error);
}

#include <algorithm>

#include "doctest.h"
#include "starfree/combinatorics.hpp"
#include "starfree/errors.hpp"
#include "starfree/kneser_graph.hpp"

using namespace starfree;

namespace {

// Counts disjoint pairs directly from the subset list.
std::size_t disjoint_pairs(int n, int k) {
  std::vector<std::uint64_t> masks;
  for_each_k_submask((std::uint64_t{1} << n) - 1, k, [&](std::uint64_t m) { masks.push_back(m); });
  std::size_t count = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) count += (masks[i] & masks[j]) == 0;
  }
  return count;
}

}  // namespace

TEST_CASE("graph construction rejects bad edges") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, dup), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, range), Error);
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{2, 0}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("fixtures") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(4).vertex_count() == 5);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(complete_graph(5).edge_count() == 10);
}

TEST_CASE("small Kneser graphs") {
  const KneserGraph g42 = KneserGraph::build(4, 2);
  CHECK(g42.vertex_count() == 6);
  CHECK(g42.graph().edge_count() == 3);
  for (Vertex v = 0; v < 6; ++v) CHECK(g42.graph().degree(v) == 1);

  const KneserGraph petersen = KneserGraph::build(5, 2);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.graph().edge_count() == 15);
  CHECK(petersen.degree() == 3);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen.graph().degree(v) == 3);
}

TEST_CASE("edge counts match disjoint pairs") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2 * k; n <= 9; ++n) {
      const KneserGraph g = KneserGraph::build(n, k);
      CHECK(g.graph().edge_count() == disjoint_pairs(n, k));
      CHECK(g.vertex_count() * g.degree() == 2 * g.graph().edge_count());
    }
  }
}

TEST_CASE("KG(2k,k) is a perfect matching of complements") {
  for (int k = 1; k <= 5; ++k) {
    const KneserGraph g = KneserGraph::build(2 * k, k);
    const std::uint64_t full = (std::uint64_t{1} << (2 * k)) - 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      REQUIRE(g.graph().degree(v) == 1);
      const Vertex u = g.graph().neighbors(v)[0];
      CHECK((g.subset(u).mask() ^ g.subset(v).mask()) == full);
    }
  }
}

TEST_CASE("vertex indices are colex ranks") {
  const KneserGraph g = KneserGraph::build(7, 3);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(colex_rank(g.subset(v)) == v);
    CHECK(g.index_of(g.subset(v)) == v);
  }
  CHECK_THROWS_AS(g.index_of(Subset::from_elements(7, std::vector<int>{1, 2})), Error);
}

TEST_CASE("query-only mode matches precomputed adjacency") {
  KneserOptions lazy;
  lazy.precompute_adjacency = false;
  const KneserGraph a = KneserGraph::build(7, 2);
  const KneserGraph b = KneserGraph::build(7, 2, lazy);
  CHECK_FALSE(b.has_adjacency());
  CHECK_THROWS_AS(b.graph(), Error);
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    const auto expected = a.graph().neighbors(v);
    const auto got = b.neighbors(v);
    CHECK(std::equal(expected.begin(), expected.end(), got.begin(), got.end()));
    for (Vertex u = 0; u < a.vertex_count(); ++u) CHECK(a.graph().adjacent(u, v) == b.adjacent(u, v));
  }
}

TEST_CASE("build preconditions and vertex cap") {
  CHECK_THROWS_AS(KneserGraph::build(3, 2), Error);
  CHECK_THROWS_AS(KneserGraph::build(4, 0), Error);
  KneserOptions capped;
  capped.max_vertices = 100;
  try {
    KneserGraph::build(10, 3, capped);
    FAIL("expected the cap to trigger");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResource);
  }
  CHECK(KneserGraph::build(9, 2, capped).vertex_count() == 36);
}

TEST_CASE("induced subgraphs") {
  const KneserGraph g = KneserGraph::build(5, 2);
  const InducedSubgraph three = induced_subgraph(g, Subset::from_elements(5, std::vector<int>{1, 2, 3}));
  CHECK(three.graph.vertex_count() == 3);
  CHECK(three.graph.edge_count() == 0);

  const InducedSubgraph four = induced_subgraph(g, Subset::from_elements(5, std::vector<int>{1, 2, 3, 4}));
  CHECK(four.graph == KneserGraph::build(4, 2).graph());
  for (Vertex v = 0; v < four.vertex_map.size(); ++v) CHECK(four.vertex_map[v] == v);

  const InducedSubgraph relabeled = induced_subgraph(g, Subset::from_elements(5, std::vector<int>{2, 3, 4, 5}));
  CHECK(relabeled.graph == KneserGraph::build(4, 2).graph());

  const KneserGraph g63 = KneserGraph::build(6, 3);
  CHECK(induced_subgraph(g63, Subset::full(6)).graph == g63.graph());
  CHECK(induced_subgraph(g, Subset::from_elements(5, std::vector<int>{1})).graph.vertex_count() == 0);
}

TEST_CASE("DIMACS export and parse") {
  CHECK(export_dimacs(KneserGraph::build(4, 2).graph()).rfind("p edge 6 3\n", 0) == 0);
  CHECK(export_dimacs(Graph(3)) == "p edge 3 0\n");
  for (const Graph& g : {KneserGraph::build(5, 2).graph(), cycle_graph(7), Graph(3), Graph(0)}) {
    CHECK(parse_dimacs(export_dimacs(g)) == g);
  }
  CHECK(parse_dimacs("c comment\np col 3 1\ne 1 3\n").adjacent(0, 2));
  CHECK_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), Error);
}

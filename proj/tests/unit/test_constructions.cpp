#include <random>

#include "doctest.h"
#include "starfree/constructions.hpp"
#include "starfree/errors.hpp"
#include "starfree/hilton_milner.hpp"
#include "starfree/kneser_graph.hpp"
#include "starfree/solver.hpp"

using namespace starfree;

namespace {

Color color_of(const KneserGraph& g, const Coloring& c, std::initializer_list<int> elements) {
  return c[g.index_of(Subset::from_elements(g.n(), std::vector<int>(elements)))];
}

Coloring optimum(const KneserGraph& g) {
  const SolveResult r = optimize(g.graph(), Mode::kStarFree, 1, 2 * g.n() - 4 * g.k() + 2);
  REQUIRE(r.verdict == Verdict::kSat);
  return *r.witness;
}

}  // namespace

TEST_CASE("ladder coloring of KG(5,2)") {
  const KneserGraph g = KneserGraph::build(5, 2);
  const Coloring c = ladder_coloring(5, 2);
  CHECK(c.range() == 4);
  for (int x = 2; x <= 5; ++x) CHECK(color_of(g, c, {1, x}) == 1);
  for (int x = 3; x <= 5; ++x) CHECK(color_of(g, c, {2, x}) == 3);
  CHECK(color_of(g, c, {3, 4}) == 4);
  CHECK(color_of(g, c, {3, 5}) == 4);
  CHECK(color_of(g, c, {4, 5}) == 4);
}

TEST_CASE("ladder value and classes") {
  CHECK(ladder_coloring(4, 2).range() == 2);
  const Coloring c = ladder_coloring(6, 2);
  CHECK(c.range() == 6);
  std::vector<int> used(7);
  for (Color x : c.colors()) used[x] = 1;
  CHECK(used == std::vector<int>{0, 1, 0, 1, 0, 1, 1});
  CHECK_FALSE(verify_local(KneserGraph::build(6, 2).graph(), c));
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2 * k; n <= 11; ++n) {
      const Coloring l = ladder_coloring(n, k);
      CHECK(coloring_value(l) == 2 * n - 4 * k + 2);
      CHECK_FALSE(verify_local(KneserGraph::build(n, k).graph(), l));
    }
  }
}

TEST_CASE("doubling") {
  const Coloring d = double_coloring(path_graph(3), Coloring(2, {1, 2, 1}));
  CHECK(d == Coloring(3, {1, 3, 1}));
  CHECK_FALSE(verify_local(path_graph(3), d));
  CHECK_THROWS_AS(double_coloring(path_graph(3), Coloring(2, {1, 1, 2})), Error);

  const Coloring two = double_coloring(cycle_graph(6), Coloring(2, {1, 2, 1, 2, 1, 2}));
  for (Color x : two.colors()) CHECK((x == 1 || x == 3));

  // A proper 3-coloring of the Petersen graph by minimum element.
  const KneserGraph petersen = KneserGraph::build(5, 2);
  std::vector<Color> colors;
  for (Vertex v = 0; v < petersen.vertex_count(); ++v) colors.push_back(std::min(petersen.subset(v).min_element(), 3));
  const Coloring doubled = double_coloring(petersen.graph(), Coloring(3, colors));
  CHECK(coloring_value(doubled) <= 5);
  CHECK_FALSE(verify_local(petersen.graph(), doubled));
}

TEST_CASE("extension of an optimal coloring") {
  const Coloring c42 = optimum(KneserGraph::build(4, 2));
  CHECK(c42.range() == 2);
  const Coloring c52 = extend_coloring(c42, 4, 2);
  CHECK(c52.range() == 4);
  CHECK(coloring_value(c52) == 4);
  CHECK_FALSE(verify_star_free(KneserGraph::build(5, 2).graph(), c52));
  const Coloring c62 = extend_coloring(c52, 5, 2);
  CHECK(c62.range() == 6);
  CHECK_FALSE(verify_star_free(KneserGraph::build(6, 2).graph(), c62));
  CHECK_THROWS_AS(extend_coloring(Coloring(2, {1, 1, 1, 1, 1, 1}), 4, 2), Error);
}

TEST_CASE("extension keeps random star-free colorings star-free") {
  std::mt19937_64 rng(3);
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 2}, {7, 3}, {6, 3}}) {
    const KneserGraph g = KneserGraph::build(n, k);
    const KneserGraph bigger = KneserGraph::build(n + 1, k);
    for (int trial = 0; trial < 20; ++trial) {
      // Shuffle ladder classes by an order-reversing map, which keeps star-freeness.
      Coloring c = ladder_coloring(n, k);
      if (rng() & 1U) {
        std::vector<Color> flipped;
        for (Color x : c.colors()) flipped.push_back(c.range() + 1 - x);
        c = Coloring(c.range(), flipped);
      }
      const Coloring e = extend_coloring(c, n, k);
      CHECK_FALSE(verify_star_free(bigger.graph(), e));
      CHECK(e.range() == c.range() + 2);
    }
  }
}

TEST_CASE("cascade checks") {
  const KneserGraph g = KneserGraph::build(6, 2);
  const Coloring c = ladder_coloring(6, 2);
  const CascadeReport r = check_cascade(g, c, 1);
  CHECK(r.ok);
  CHECK(r.element == 1);
  // Class 3 = sets with minimum 2; classes 2 and 4 are empty.
  CHECK(check_cascade(g, c, 3).ok);
  CHECK(check_cascade(g, c, 3).element == 2);
  CHECK_THROWS_AS(check_cascade(g, c, 2), Error);

  // A class-2 vertex missing the common element of class 1.
  const KneserGraph g42 = KneserGraph::build(4, 2);
  const Coloring bad(3, {1, 1, 2, 3, 3, 3});
  const CascadeReport broken = check_cascade(g42, bad, 1);
  CHECK_FALSE(broken.ok);
  CHECK(broken.offending_vertex == Vertex{2});
  CHECK(broken.offending_color == 2);
}

TEST_CASE("reduce after extend returns the original range") {
  for (const auto& [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
    const KneserGraph g = KneserGraph::build(n, k);
    const Coloring c = optimum(g);
    const Coloring e = extend_coloring(c, n, k);
    const KneserGraph bigger = KneserGraph::build(n + 1, k);
    const Color j = c.range() + 2;
    const auto size = std::count(e.colors().begin(), e.colors().end(), j);
    REQUIRE(static_cast<std::uint64_t>(size) >= hm_bound(n + 1, k));
    const ReduceResult r = reduce_coloring(bigger, e, j);
    CHECK(r.common_element == n + 1);
    CHECK(r.coloring.range() == c.range());
    CHECK_FALSE(verify_star_free(g.graph(), r.coloring));
    CHECK(r.coloring == c);
  }
}

TEST_CASE("reduce at the lowest class") {
  const KneserGraph g = KneserGraph::build(6, 2);
  const Coloring c = ladder_coloring(6, 2);
  REQUIRE(smallest_qualifying_class(g, c) == 1);
  const ReduceResult r = reduce_coloring(g, c, 1);
  CHECK(r.common_element == 1);
  CHECK(r.permutation == std::vector<int>{6, 2, 3, 4, 5, 1});
  CHECK(r.coloring.range() == 4);
  CHECK_FALSE(verify_star_free(KneserGraph::build(5, 2).graph(), r.coloring));
  for (Vertex v = 0; v < r.vertex_map.size(); ++v) {
    CHECK_FALSE(g.subset(r.vertex_map[v]).contains(1));
    CHECK(r.coloring[v] == c[r.vertex_map[v]] - 2);
  }
}

TEST_CASE("reduce preconditions") {
  const KneserGraph g = KneserGraph::build(5, 2);
  const Coloring ladder = ladder_coloring(5, 2);
  try {
    reduce_coloring(g, ladder, 3);
    FAIL("class 3 is below the bound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
  CHECK_THROWS_AS(reduce_coloring(KneserGraph::build(4, 2), ladder_coloring(4, 2), 1), Error);
  CHECK_THROWS_AS(reduce_coloring(g, Coloring(4, std::vector<Color>(10, 1)), 1), Error);
}

TEST_CASE("shift") {
  CHECK(shift_colors(Coloring(2, {1, 2}), 3) == Coloring(5, {4, 5}));
  CHECK_THROWS_AS(shift_colors(Coloring(2, {1, 2}), -1), Error);
}

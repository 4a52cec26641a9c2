#include <random>

#include "doctest.h"
#include "starfree/cnf.hpp"
#include "starfree/errors.hpp"
#include "starfree/kneser_graph.hpp"
#include "starfree/solver.hpp"
#include "starfree/testing/oracles.hpp"

using namespace starfree;

namespace {

constexpr Mode kModes[] = {Mode::kProper, Mode::kStarFree, Mode::kLocal};

Graph random_graph(int vertices, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(vertices, edges);
}

int solve_kneser(int n, int k, Mode mode, const SolverOptions& options = {}) {
  const KneserGraph g = KneserGraph::build(n, k);
  const Bracket b = kneser_bracket(n, k, mode);
  const SolveResult r = optimize(g.graph(), mode, 1, b.upper, options);
  REQUIRE(r.verdict == Verdict::kSat);
  REQUIRE(r.witness);
  CHECK_FALSE(verify(g.graph(), *r.witness, mode));
  return r.optimum;
}

}  // namespace

TEST_CASE("decide on a path") {
  const Graph p3 = path_graph(3);
  CHECK(decide(p3, 2, Mode::kStarFree).verdict == Verdict::kUnsat);
  const DecideResult r = decide(p3, 3, Mode::kStarFree);
  REQUIRE(r.verdict == Verdict::kSat);
  CHECK_FALSE(verify_star_free(p3, *r.witness));
  CHECK(r.witness->range() == 3);
  CHECK(decide(p3, 2, Mode::kProper).verdict == Verdict::kSat);
}

TEST_CASE("Petersen graph needs four star-free colors") {
  const Graph g = KneserGraph::build(5, 2).graph();
  CHECK(decide(g, 3, Mode::kStarFree).verdict == Verdict::kUnsat);
  CHECK(decide(g, 4, Mode::kStarFree).verdict == Verdict::kSat);
  CHECK(decide(g, 3, Mode::kProper).verdict == Verdict::kSat);
  CHECK(decide(g, 2, Mode::kProper).verdict == Verdict::kUnsat);
}

TEST_CASE("small Kneser optima") {
  CHECK(solve_kneser(4, 2, Mode::kStarFree) == 2);
  CHECK(solve_kneser(5, 2, Mode::kStarFree) == 4);
  CHECK(solve_kneser(6, 3, Mode::kStarFree) == 2);
  CHECK(solve_kneser(7, 3, Mode::kStarFree) == 4);
  CHECK(solve_kneser(5, 2, Mode::kLocal) == 4);
  for (const auto& [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    CHECK(solve_kneser(n, k, Mode::kProper) == n - 2 * k + 2);
  }
  const int kg62 = solve_kneser(6, 2, Mode::kStarFree);
  CHECK(kg62 >= 4);
  CHECK(kg62 <= 6);
}

TEST_CASE("symmetry options do not change optima") {
  SolverOptions plain;
  plain.break_reflection = false;
  plain.forward_check = false;
  SolverOptions transitive;
  transitive.assume_vertex_transitive = true;
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 2}, {7, 3}}) {
    for (Mode mode : kModes) {
      const int base = solve_kneser(n, k, mode);
      CHECK(solve_kneser(n, k, mode, plain) == base);
      CHECK(solve_kneser(n, k, mode, transitive) == base);
    }
  }
}

TEST_CASE("optimize walks down from a high lower hint") {
  const Graph g = KneserGraph::build(5, 2).graph();
  const SolveResult r = optimize(g, Mode::kStarFree, 6, 8);
  CHECK(r.verdict == Verdict::kSat);
  CHECK(r.optimum == 4);
}

TEST_CASE("optimize reports an empty range") {
  const Graph g = KneserGraph::build(5, 2).graph();
  const SolveResult r = optimize(g, Mode::kStarFree, 1, 3);
  CHECK(r.verdict == Verdict::kUnsat);
  CHECK(r.proven_lower == 4);
  CHECK_THROWS_AS(optimize(g, Mode::kStarFree, 5, 3), Error);
}

TEST_CASE("decide agrees with enumeration on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int vertices = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(vertices, 0.2 + 0.1 * (trial % 6), rng);
    for (Mode mode : kModes) {
      for (int t = 1; t <= 4; ++t) {
        const DecideResult d = decide(g, t, mode);
        const auto brute = oracle::brute_force_coloring(g, t, mode);
        REQUIRE(d.verdict != Verdict::kUnknown);
        CHECK((d.verdict == Verdict::kSat) == brute.has_value());
        if (d.witness) CHECK(oracle::satisfies(g, std::vector<int>(d.witness->colors().begin(), d.witness->colors().end()), mode));
      }
    }
  }
}

TEST_CASE("decide is monotone in the range") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(8, 0.4, rng);
    for (Mode mode : kModes) {
      bool sat = false;
      for (int t = 1; t <= 8; ++t) {
        const bool now = decide(g, t, mode).verdict == Verdict::kSat;
        CHECK((!sat || now));
        sat = now;
      }
    }
  }
}

TEST_CASE("parallel search returns the sequential witness") {
  const int cases[][3] = {{5, 2, 4}, {6, 2, 6}, {6, 2, 5}, {7, 3, 4}};
  for (const auto& [n, k, t] : cases) {
    const Graph g = KneserGraph::build(n, k).graph();
    const DecideResult one = decide(g, t, Mode::kStarFree);
    for (unsigned threads : {2u, 3u, 5u}) {
      SolverOptions options;
      options.threads = threads;
      const DecideResult many = decide(g, t, Mode::kStarFree, options);
      CHECK(many.verdict == one.verdict);
      CHECK(many.witness == one.witness);
    }
  }
}

TEST_CASE("budget exhaustion and resume") {
  const Graph g = KneserGraph::build(6, 2).graph();
  for (int t : {5, 6}) {
    const DecideResult full = decide(g, t, Mode::kStarFree);
    SolverOptions options;
    options.node_budget = 200;
    DecideResult step = decide(g, t, Mode::kStarFree, options);
    int rounds = 1;
    while (step.verdict == Verdict::kUnknown) {
      CHECK_FALSE(step.checkpoint.empty());
      options.resume_path = step.checkpoint;
      step = decide(g, t, Mode::kStarFree, options);
      REQUIRE(++rounds < 1000);
    }
    if (t == 5) CHECK(rounds > 1);
    CHECK(step.verdict == full.verdict);
    CHECK(step.witness == full.witness);
  }
  SolverOptions bad;
  bad.resume_path = {9};
  CHECK_THROWS_AS(decide(g, 5, Mode::kStarFree, bad), Error);
}

TEST_CASE("optimize resumes from a saved point") {
  const Graph g = KneserGraph::build(6, 2).graph();
  SolverOptions options;
  options.node_budget = 1000;
  SolveResult r = optimize(g, Mode::kStarFree, 4, 6, options);
  int rounds = 1;
  while (r.verdict == Verdict::kUnknown) {
    const ResumePoint point{r.checkpoint_t, r.checkpoint, r.proven_lower};
    r = optimize(g, Mode::kStarFree, 4, 6, options, &point);
    REQUIRE(++rounds < 1000);
  }
  CHECK(rounds > 1);
  CHECK(r.optimum == optimize(g, Mode::kStarFree, 4, 6).optimum);
}

TEST_CASE("branching order") {
  const Graph star = star_graph(3);
  CHECK(branching_order(star) == std::vector<Vertex>{0, 1, 2, 3});
  const Graph p = path_graph(4);
  CHECK(branching_order(p) == std::vector<Vertex>{1, 2, 0, 3});
}

TEST_CASE("brackets") {
  const Bracket b = kneser_bracket(6, 2, Mode::kStarFree);
  CHECK(b.lower == 4);
  CHECK(b.upper == 6);
  const Bracket p = kneser_bracket(6, 2, Mode::kProper);
  CHECK(p.lower == 4);
  CHECK(p.upper == 4);
  const Bracket big = kneser_bracket(20, 2, Mode::kLocal);
  CHECK(big.lower == 2 * 18 - 10);
  CHECK(big.upper == 34);
}

TEST_CASE("CNF for a path") {
  const Cnf cnf = build_cnf(path_graph(3), 2, Mode::kStarFree);
  CHECK(cnf.variables == 6);
  CHECK_FALSE(oracle::brute_force_sat(cnf).has_value());
  CHECK(decide(path_graph(3), 2, Mode::kStarFree).verdict == Verdict::kUnsat);
}

TEST_CASE("CNF for an edgeless graph has only covering clauses") {
  for (int t = 1; t <= 4; ++t) {
    const Cnf cnf = build_cnf(Graph(3), t, Mode::kLocal);
    REQUIRE(cnf.clauses.size() == 3);
    for (Vertex v = 0; v < 3; ++v) {
      CHECK(cnf.clauses[v].size() == static_cast<std::size_t>(t));
      for (int lit : cnf.clauses[v]) CHECK(lit > 0);
    }
  }
}

TEST_CASE("CNF models decode to valid colorings") {
  const Graph g = KneserGraph::build(4, 2).graph();
  const Cnf cnf = build_cnf(g, 2, Mode::kStarFree);
  const auto model = oracle::brute_force_sat(cnf);
  REQUIRE(model);
  CHECK_FALSE(verify_star_free(g, decode_model(*model, g.vertex_count(), 2)));
  CHECK(decide(g, 2, Mode::kStarFree).verdict == Verdict::kSat);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph h = random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng);
    for (Mode mode : kModes) {
      for (int t = 1; t <= 4 && h.vertex_count() * t <= 24; ++t) {
        const auto m = oracle::brute_force_sat(build_cnf(h, t, mode));
        CHECK(m.has_value() == (decide(h, t, mode).verdict == Verdict::kSat));
        if (m) CHECK_FALSE(verify(h, decode_model(*m, h.vertex_count(), t), mode));
      }
    }
  }
}

TEST_CASE("DIMACS CNF round trip") {
  const Cnf cnf = build_cnf(KneserGraph::build(5, 2).graph(), 3, Mode::kLocal);
  const std::string text = format_dimacs_cnf(cnf);
  CHECK(text.rfind("p cnf 30 ", 0) == 0);
  const Cnf back = parse_dimacs_cnf(text);
  CHECK(back.variables == cnf.variables);
  CHECK(back.clauses == cnf.clauses);
  CHECK(export_cnf(KneserGraph::build(5, 2).graph(), 3, Mode::kLocal) == text);
  CHECK(color_variable(2, 3, 4) == 11);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 3 0\n"), Error);
}

#include "doctest.h"
#include "starfree/bounds.hpp"
#include "starfree/errors.hpp"
#include "starfree/fan.hpp"
#include "starfree/kneser_graph.hpp"
#include "starfree/report_json.hpp"
#include "starfree/solver.hpp"

using namespace starfree;
using nlohmann::json;

namespace {

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("report for KG(5,2)") {
  const BoundsReport r = bounds_report(5, 2);
  CHECK(r.chi == 3);
  CHECK(r.star_free_upper == 4);
  CHECK(r.star_free_lower == 3);
  CHECK(r.small_n_exact);
  CHECK(r.exact_value_known == 4);
  CHECK(r.hm_bound == std::uint64_t{4});
  CHECK(r.conjectured_value == 4);
  CHECK_FALSE(r.refined_lower_k81);
}

TEST_CASE("report for KG(6,2) and KG(8,3)") {
  const BoundsReport r = bounds_report(6, 2);
  CHECK(r.chi == 4);
  CHECK(r.star_free_upper == 6);
  CHECK(r.star_free_lower == 4);
  CHECK_FALSE(r.small_n_exact);
  CHECK_FALSE(r.exact_value_known);

  const BoundsReport s = bounds_report(8, 3);
  CHECK(s.small_n_exact);
  CHECK(s.exact_value_known == 6);
}

TEST_CASE("large parameters") {
  const BoundsReport r = bounds_report(1000, 81);
  CHECK(r.chi == 1000 - 162 + 2);
  CHECK(r.refined_lower_k81 == 2 * r.chi - 8);
  CHECK(r.star_free_lower == 2 * r.chi - 10);
  CHECK_FALSE(r.hm_bound);
  const BoundsReport big = bounds_report(2 * 81 * 81 * 81, 81);
  CHECK(big.recursion_applies);
  CHECK_THROWS_AS(bounds_report(3, 2), Error);
  CHECK_THROWS_AS(bounds_report(4, 1), Error);
}

TEST_CASE("recursion threshold") {
  CHECK(recursion_threshold(3) == 34);
  CHECK_FALSE(bounds_report(33, 3).recursion_applies);
  CHECK(bounds_report(34, 3).recursion_applies);
}

TEST_CASE("inequality 1") {
  CHECK(ineq1_holds(6, 3));
  for (int k = 3; k <= 8; ++k) {
    for (int n = 2 * k; n <= 60; ++n) CHECK(ineq1_holds(n, k));
  }
  CHECK_THROWS_AS(ineq1_holds(6, 2), Error);
}

TEST_CASE("inequality 2") {
  CHECK(ineq2_holds(10, 3, 3));
  for (int k = 2; k <= 6; ++k) {
    CHECK(ineq2_holds(2 * k - 2, 2 * k - 3, k));
    for (int a = 2 * k - 2; a <= 200; ++a) {
      for (int b = -2 * k; b <= 2 * k - 3; ++b) CHECK(ineq2_holds(a, b, k));
    }
  }
  CHECK_THROWS_AS(ineq2_holds(1, 1, 3), Error);
  CHECK(ineq2_holds(10, 0, 3));
  CHECK_THROWS_AS(ineq2_holds(10, 4, 3), Error);
}

TEST_CASE("ratio check") {
  CHECK(recursion_ratio_check(40, 3));
  CHECK(recursion_ratio_check(34, 3));
  for (int k = 3; k <= 8; ++k) {
    for (std::int64_t n = recursion_threshold(k); n < recursion_threshold(k) + 200; ++n) {
      CHECK(recursion_ratio_check(n, k));
    }
  }
}

TEST_CASE("sweep") {
  const SweepSummary s = bounds_sweep(8, 60);
  CHECK(s.ineq1_failures == 0);
  CHECK(s.ineq2_failures == 0);
  CHECK(s.ineq1_checked == 300);
  CHECK(s.threshold_overlaps == 0);
  for (const BoundsReport& r : s.reports) {
    CHECK(r.star_free_lower <= r.star_free_upper);
    CHECK(r.chi <= r.star_free_lower);
  }
}

TEST_CASE("JSON round trips") {
  for (const auto& [n, k] : {std::pair{5, 2}, {6, 2}, {8, 3}, {500, 81}}) {
    const BoundsReport r = bounds_report(n, k);
    CHECK(round_trip(r) == r);
  }
  const SweepSummary sweep = bounds_sweep(4, 12);
  CHECK(round_trip(sweep) == sweep);

  const Graph g = KneserGraph::build(5, 2).graph();
  const SolveResult solved = optimize(g, Mode::kStarFree, 1, 4);
  CHECK(round_trip(solved) == solved);
  SolverOptions tight;
  tight.node_budget = 5;
  const SolveResult unknown = optimize(KneserGraph::build(6, 2).graph(), Mode::kLocal, 4, 6, tight);
  CHECK(unknown.verdict == Verdict::kUnknown);
  CHECK(round_trip(unknown) == unknown);

  const ResumePoint point{5, {1, 3, 2}, 4};
  CHECK(round_trip(point) == point);

  FanLabeling l(2, 2);
  l.set_antipodal(SignVector::parse("+0"), 1);
  l.set_antipodal(SignVector::parse("0+"), 2);
  l.set_antipodal(SignVector::parse("++"), 2);
  l.set_antipodal(SignVector::parse("+-"), 1);
  const AlternatingCensus census = count_alternating(l, true);
  CHECK(round_trip(census) == census);

  const CriterionResult criterion{4, "solver", "lower-bound", "title", true, "detail", 0.25};
  CHECK(round_trip(criterion) == criterion);

  CHECK_THROWS(json::parse(R"({"t": 1, "verdict": "MAYBE", "nodes": 3})").get<DecisionRecord>());
}

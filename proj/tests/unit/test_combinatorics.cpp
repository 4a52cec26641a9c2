#include <random>
#include <set>

#include "doctest.h"
#include "starfree/combinatorics.hpp"
#include "starfree/errors.hpp"
#include "starfree/testing/oracles.hpp"

using namespace starfree;

namespace {

Subset set_of(int n, std::initializer_list<int> elements) {
  const std::vector<int> v(elements);
  return Subset::from_elements(n, v);
}

}  // namespace

TEST_CASE("binomial small values") {
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(2, 2) == 1);
  CHECK(binomial(6, 3) == oracle::factorial_binomial(6, 3));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial agrees with factorial formula") {
  for (int a = 0; a <= 30; ++a) {
    for (int b = 0; b <= a; ++b) CHECK(binomial(a, b) == oracle::factorial_binomial(a, b));
  }
}

TEST_CASE("binomial beyond the table and overflow") {
  CHECK(binomial(66, 1) == 66);
  CHECK(binomial(67, 33) == 14226520737620288370ULL);
  CHECK(binomial(100, 98) == 4950);
  CHECK_THROWS_AS(binomial(70, 35), Error);
  try {
    binomial(200, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
}

TEST_CASE("colex rank examples") {
  CHECK(colex_rank(set_of(5, {1, 2})) == 0);
  CHECK(colex_rank(set_of(5, {4, 5})) == 9);
  CHECK(colex_rank(set_of(5, {1, 3})) == 1);
  CHECK(colex_rank(set_of(5, {2, 3})) == 2);
}

TEST_CASE("colex rank matches sorted enumeration") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto sorted = oracle::colex_sorted_subsets(n, k);
      REQUIRE(sorted.size() == binomial(n, k));
      for (std::size_t r = 0; r < sorted.size(); ++r) {
        const Subset s = Subset::from_elements(n, sorted[r]);
        CHECK(colex_rank(s) == r);
        CHECK(colex_unrank(n, k, r) == s);
      }
    }
  }
}

TEST_CASE("unrank inverts rank") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (std::uint64_t r = 0; r < binomial(n, k); ++r) CHECK(colex_rank(colex_unrank(n, k, r)) == r);
    }
  }
  CHECK_THROWS_AS(colex_unrank(5, 2, 10), Error);
}

TEST_CASE("k-submask enumeration is colex") {
  std::vector<std::uint64_t> seen;
  for_each_k_submask(0b11111, 3, [&](std::uint64_t m) { seen.push_back(m); });
  REQUIRE(seen.size() == 10);
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(colex_rank(Subset::from_mask(5, seen[i])) == i);
}

TEST_CASE("subset order") {
  CHECK(subset_order_less(set_of(4, {3}), set_of(4, {1, 2})));
  CHECK_FALSE(subset_order_less(set_of(4, {1, 2}), set_of(4, {3})));
  CHECK(subset_order_less(set_of(4, {1}), set_of(4, {2})));
  CHECK_FALSE(subset_order_less(set_of(4, {2, 3}), set_of(4, {2, 3})));
  CHECK(subset_order_less(Subset::from_mask(4, 0), set_of(4, {1})));
  CHECK_THROWS_AS(subset_order_less(set_of(4, {1}), set_of(5, {2})), Error);
}

TEST_CASE("subset order is a strict total order") {
  const int n = 5;
  std::vector<Subset> all;
  for (std::uint64_t m = 0; m < (1U << n); ++m) all.push_back(Subset::from_mask(n, m));
  for (const Subset& a : all) {
    for (const Subset& b : all) {
      const bool ab = subset_order_less(a, b);
      const bool ba = subset_order_less(b, a);
      CHECK(int(ab) + int(ba) + int(a == b) == 1);
      if (a.size() < b.size()) CHECK(ab);
    }
  }
}

TEST_CASE("subset validation and text") {
  CHECK_THROWS_AS(set_of(5, {2, 1}), Error);
  CHECK_THROWS_AS(set_of(5, {1, 1}), Error);
  CHECK_THROWS_AS(set_of(5, {0}), Error);
  CHECK_THROWS_AS(set_of(5, {6}), Error);
  const Subset s = set_of(6, {1, 3, 5});
  CHECK(to_text(s) == "1,3,5");
  CHECK(parse_subset(6, "1,3,5") == s);
  CHECK(s.min_element() == 1);
  CHECK(s.max_element() == 5);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.intersects(set_of(6, {5, 6})));
  CHECK_FALSE(s.intersects(set_of(6, {2, 4})));
  CHECK(set_of(6, {3}).is_subset_of(s));
  CHECK_THROWS_AS(parse_subset(6, "1,,3"), Error);
  CHECK_THROWS_AS(parse_subset(6, "3,1"), Error);
  CHECK_THROWS_AS(parse_subset(6, "1,7"), Error);
  CHECK_THROWS_AS(parse_subset(6, "x"), Error);
}

TEST_CASE("random round trips near the size limit") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 40 + static_cast<int>(rng() % 25);
    const int k = 1 + static_cast<int>(rng() % 6);
    std::set<int> elements;
    while (static_cast<int>(elements.size()) < k) elements.insert(1 + static_cast<int>(rng() % n));
    const Subset s = Subset::from_elements(n, std::vector<int>(elements.begin(), elements.end()));
    CHECK(colex_unrank(n, k, colex_rank(s)) == s);
    CHECK(parse_subset(n, to_text(s)) == s);
  }
}

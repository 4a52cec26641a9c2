#include <algorithm>
#include <random>

#include "doctest.h"
#include "starfree/combinatorics.hpp"
#include "starfree/errors.hpp"
#include "starfree/hilton_milner.hpp"

using namespace starfree;

namespace {

IntersectingFamily family_of(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
  IntersectingFamily f{n, k, {}};
  for (const auto& s : sets) f.members.push_back(Subset::from_elements(n, std::vector<int>(s)));
  return f;
}

bool pairwise_intersecting(const std::vector<Subset>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].intersects(sets[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("bound values") {
  CHECK(hm_bound(5, 2) == 4);
  CHECK(hm_bound(6, 3) == 11);
  CHECK(hm_bound(7, 3) == 14);
  for (int k = 2; k <= 8; ++k) CHECK(hm_bound(2 * k, k) == binomial(2 * k - 1, k - 1) + 1);
  CHECK_THROWS_AS(hm_bound(5, 1), Error);
  CHECK_THROWS_AS(hm_bound(5, 3), Error);
}

TEST_CASE("common element") {
  CHECK(common_element(family_of(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 1);
  try {
    common_element(family_of(6, 2, {{1, 2}, {1, 3}, {2, 3}}));
    FAIL("below the bound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
  CHECK_THROWS_AS(common_element(family_of(5, 2, {{1, 2}, {3, 4}, {1, 4}, {1, 5}})), Error);
}

TEST_CASE("random stars above the bound") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const int k = n == 6 ? 2 : 2 + static_cast<int>(rng() % 2);
    const int center = 1 + static_cast<int>(rng() % n);
    std::vector<Subset> star;
    for_each_k_submask((std::uint64_t{1} << n) - 1, k, [&](std::uint64_t m) {
      if ((m >> (center - 1)) & 1U) star.push_back(Subset::from_mask(n, m));
    });
    std::shuffle(star.begin(), star.end(), rng);
    star.resize(hm_bound(n, k) + rng() % (star.size() - hm_bound(n, k) + 1));
    std::uint64_t common = ~std::uint64_t{0};
    for (const Subset& s : star) common &= s.mask();
    const int found = common_element({n, k, star});
    CHECK(found == center);
    CHECK(common == (std::uint64_t{1} << (center - 1)));
  }
}

TEST_CASE("largest non-star families") {
  const NonStarResult r52 = max_nonstar_intersecting(5, 2);
  CHECK(r52.size == 3);
  CHECK(r52.size == hm_bound(5, 2) - 1);

  const NonStarResult r62 = max_nonstar_intersecting(6, 2);
  CHECK(r62.size == 3);
  std::vector<std::string> witness;
  for (const Subset& s : r62.witness) witness.push_back(to_text(s));
  CHECK(witness == std::vector<std::string>{"1,2", "1,3", "2,3"});

  const NonStarResult r73 = max_nonstar_intersecting(7, 3);
  CHECK(r73.size == 13);
  CHECK(r73.size == hm_bound(7, 3) - 1);
  CHECK(r73.witness.size() == 13);
  CHECK(pairwise_intersecting(r73.witness));
  std::uint64_t common = ~std::uint64_t{0};
  for (const Subset& s : r73.witness) common &= s.mask();
  CHECK(common == 0);
}

TEST_CASE("oracle size cap") {
  try {
    max_nonstar_intersecting(8, 3);
    FAIL("C(8,3) exceeds the cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResource);
  }
}

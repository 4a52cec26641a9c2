#include "starfree/hilton_milner.hpp"

#include <bit>
#include <string>

#include "starfree/errors.hpp"

namespace starfree {

void check_intersecting(const IntersectingFamily& family) {
  for (const Subset& a : family.members) {
    if (a.ground_size() != family.n || a.size() != family.k) {
      fail(ErrorCode::kInput, "family member '" + to_text(a) + "' is not a k-subset of [n]");
    }
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    for (std::size_t j = i + 1; j < family.members.size(); ++j) {
      if (!family.members[i].intersects(family.members[j])) {
        fail(ErrorCode::kInput, "members '" + to_text(family.members[i]) + "' and '" +
                                    to_text(family.members[j]) + "' are disjoint");
      }
    }
  }
}

std::uint64_t hm_bound(int n, int k) {
  if (k < 2 || n < 2 * k) {
    fail(ErrorCode::kInput, "hm_bound needs n >= 2k >= 4, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  return binomial(un - 1, uk - 1) - binomial(un - uk - 1, uk - 1) + 2;
}

int common_element(const IntersectingFamily& family) {
  const std::uint64_t bound = hm_bound(family.n, family.k);
  if (family.members.size() < bound) {
    fail(ErrorCode::kPrecondition, "family of size " + std::to_string(family.members.size()) +
                                       " is below the Hilton-Milner bound " + std::to_string(bound));
  }
  check_intersecting(family);
  std::uint64_t common = Subset::full(family.n).mask();
  for (const Subset& a : family.members) common &= a.mask();
  if (std::popcount(common) != 1) {
    fail(ErrorCode::kPrecondition, "intersection of the family has " +
                                       std::to_string(std::popcount(common)) +
                                       " elements, expected exactly one");
  }
  return std::countr_zero(common) + 1;
}

namespace {

// Branch and bound for a maximum clique of the "intersects" graph whose
// members have empty common intersection. Candidate sets are bitsets over
// vertex indices (C(n,k) <= 40 < 64).
class NonStarSearch {
 public:
  NonStarSearch(int n, int k) : n_(n) {
    for_each_k_submask(Subset::full(n).mask(), k, [&](std::uint64_t mask) { sets_.push_back(mask); });
    intersecting_.assign(sets_.size(), 0);
    for (std::size_t a = 0; a < sets_.size(); ++a) {
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        if (a != b && (sets_[a] & sets_[b]) != 0) intersecting_[a] |= std::uint64_t{1} << b;
      }
    }
  }

  NonStarResult run() {
    const std::uint64_t all =
        sets_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sets_.size()) - 1;
    expand(0, Subset::full(n_).mask(), all);
    NonStarResult result;
    result.size = static_cast<std::uint64_t>(std::popcount(best_));
    for (std::uint64_t rest = best_; rest != 0; rest &= rest - 1) {
      result.witness.push_back(Subset::from_mask(n_, sets_[std::countr_zero(rest)]));
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  // Greedy coloring of the candidate set bounds the clique size reachable from it.
  int color_bound(std::uint64_t candidates) const {
    int colors = 0;
    while (candidates != 0) {
      ++colors;
      std::uint64_t available = candidates;
      while (available != 0) {
        const int v = std::countr_zero(available);
        available &= ~(std::uint64_t{1} << v);
        available &= ~intersecting_[v];  // same color class = pairwise non-adjacent
        candidates &= ~(std::uint64_t{1} << v);
      }
    }
    return colors;
  }

  void expand(std::uint64_t chosen, std::uint64_t common, std::uint64_t candidates) {
    ++nodes_;
    const int size = std::popcount(chosen);
    if (common == 0 && size > std::popcount(best_)) best_ = chosen;
    if (candidates == 0) return;
    if (size + std::popcount(candidates) <= std::popcount(best_)) return;
    // An element shared by the chosen sets and every candidate survives in
    // every extension, so the common intersection can never become empty.
    std::uint64_t reachable = common;
    for (std::uint64_t rest = candidates; rest != 0 && reachable != 0; rest &= rest - 1) {
      reachable &= sets_[std::countr_zero(rest)];
    }
    if (reachable != 0) return;
    if (size + color_bound(candidates) <= std::popcount(best_)) return;

    while (candidates != 0) {
      if (size + std::popcount(candidates) <= std::popcount(best_)) return;
      const int v = std::countr_zero(candidates);
      candidates &= ~(std::uint64_t{1} << v);
      expand(chosen | (std::uint64_t{1} << v), common & sets_[v], candidates & intersecting_[v]);
    }
  }

  int n_;
  std::vector<std::uint64_t> sets_;
  std::vector<std::uint64_t> intersecting_;
  std::uint64_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

NonStarResult max_nonstar_intersecting(int n, int k) {
  if (k < 1 || n < 2 * k) fail(ErrorCode::kInput, "need n >= 2k >= 2");
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (count > kMaxOracleVertices) {
    fail(ErrorCode::kResource, "C(" + std::to_string(n) + "," + std::to_string(k) + ")=" +
                                   std::to_string(count) + " exceeds the oracle limit of " +
                                   std::to_string(kMaxOracleVertices));
  }
  return NonStarSearch(n, k).run();
}

}  // namespace starfree

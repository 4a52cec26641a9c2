#pragma once

#include <cstdint>
#include <vector>

#include "starfree/combinatorics.hpp"

namespace starfree {

/// k-subsets of [n] that pairwise intersect (an independent set of KG(n,k)).
struct IntersectingFamily {
  int n = 0;
  int k = 0;
  std::vector<Subset> members;
};

/// Throws ErrorCode::kInput if some members are disjoint or malformed.
void check_intersecting(const IntersectingFamily& family);

/// C(n-1,k-1) - C(n-k-1,k-1) + 2: any intersecting family at least this large
/// has a common element. Defined for n >= 2k >= 4.
std::uint64_t hm_bound(int n, int k);

/// The unique element shared by every member. Requires an intersecting family
/// of size >= hm_bound(n,k) whose intersection is a singleton; otherwise
/// throws ErrorCode::kPrecondition.
int common_element(const IntersectingFamily& family);

/// Largest families this oracle accepts, as C(n,k).
inline constexpr std::uint64_t kMaxOracleVertices = 40;

struct NonStarResult {
  std::uint64_t size = 0;
  std::vector<Subset> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive maximum of |F| over intersecting families F of k-subsets of [n]
/// with empty common intersection (branch and bound over cliques of the
/// intersection graph). Throws ErrorCode::kResource when C(n,k) > 40.
NonStarResult max_nonstar_intersecting(int n, int k);

}  // namespace starfree

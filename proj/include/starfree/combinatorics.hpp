#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starfree {

/// Largest ground set supported by the 64-bit mask representation.
inline constexpr int kMaxGroundSize = 64;

/// Exact C(a, b); 0 when b > a. Throws ErrorCode::kOverflow when the result
/// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

/// A subset of [n] = {1..n}. Element e is stored as bit e-1 of the mask, so
/// comparing masks of equal-size sets is exactly colex comparison.
class Subset {
 public:
  /// The empty subset of an empty ground set.
  Subset() = default;

  static Subset from_elements(int n, std::span<const int> elements);
  static Subset from_mask(int n, std::uint64_t mask);
  static Subset full(int n);

  int ground_size() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((mask_ >> (element - 1)) & 1U);
  }
  std::vector<int> elements() const;

  /// Smallest element; 0 for the empty set.
  int min_element() const noexcept {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }
  /// Largest element; 0 for the empty set.
  int max_element() const noexcept {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
  }

  bool intersects(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

/// A k-subset is a Subset whose size plays the role of k.
using KSubset = Subset;

/// Colex rank: sum over i of C(s_i - 1, i) for s_1 < ... < s_k.
std::uint64_t colex_rank(const Subset& s);
Subset colex_unrank(int n, int k, std::uint64_t rank);

/// Linear order on subsets of the same [n]: smaller cardinality first, equal
/// cardinalities compared colexicographically. Throws on mismatched ground sets.
bool subset_order_less(const Subset& a, const Subset& b);

/// Canonical text "1,3,5"; the empty set is "".
std::string to_text(const Subset& s);
/// Parses the canonical text form; elements must be ascending and in [n].
Subset parse_subset(int n, std::string_view text);

/// Calls fn(mask) for every k-element submask of `universe`, in colex order.
template <typename Fn>
void for_each_k_submask(std::uint64_t universe, int k, Fn&& fn) {
  const int u = std::popcount(universe);
  if (k < 0 || k > u) return;
  int positions[64];
  int count = 0;
  for (std::uint64_t rest = universe; rest != 0; rest &= rest - 1) {
    positions[count++] = std::countr_zero(rest);
  }
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  // idx holds k increasing indices into `positions`; advanced colexicographically.
  int idx[64];
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= std::uint64_t{1} << positions[idx[i]];
    fn(mask);
    int i = 0;
    while (i < k - 1 && idx[i] + 1 == idx[i + 1]) {
      idx[i] = i;
      ++i;
    }
    if (i == k - 1 && idx[i] + 1 == u) return;
    ++idx[i];
  }
}

}  // namespace starfree

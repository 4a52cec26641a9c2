#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

namespace starfree {

/// Closed-form facts about the star-free chromatic number of KG(n,k).
struct BoundsReport {
  int n = 0;
  int k = 0;
  std::int64_t chi = 0;              ///< n-2k+2
  std::int64_t star_free_upper = 0;  ///< 2n-4k+2, the ladder coloring
  std::int64_t star_free_lower = 0;  ///< max{2chi-10, chi}
  /// max{2chi-8, chi}, reported only for k >= 81.
  std::optional<std::int64_t> refined_lower_k81;
  /// Absent when the count does not fit in 64 bits.
  std::optional<std::uint64_t> hm_bound;
  bool small_n_exact = false;  ///< 3n <= 8k
  bool recursion_applies = false;  ///< n >= 2k^3-2k^2-2k+4
  std::optional<std::int64_t> exact_value_known;
  std::int64_t conjectured_value = 0;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Requires n >= 2k >= 4.
BoundsReport bounds_report(int n, int k);

/// 2k^3 - 2k^2 - 2k + 4: from here on chi_s(KG(n,k)) = chi_s(KG(n-1,k)) + 2.
/// The recursion's proof argues from 2k^3-2k^2-2k+3; the report keeps the
/// stated constant.
std::int64_t recursion_threshold(int k);

/// C(n-1,k-1) - C(n-k-1,k-1) + 2 <= k C(n-2,k-2). Requires k >= 3, n >= 2k.
bool ineq1_holds(int n, int k);

/// a(a-b-2k+1) <= (a-(b+2k-1)/2)^2 <= (a-b)(a-b-1), evaluated after scaling
/// by 4. Requires a >= 2k-2 and 1 <= b <= 2k-3.
bool ineq2_holds(std::int64_t a, std::int64_t b, int k);

/// n(n-1) / (k^2 (k-1)) >= 2(n-2k+1), by cross-multiplication.
bool recursion_ratio_check(std::int64_t n, int k);

struct SweepSummary {
  std::vector<BoundsReport> reports;
  std::uint64_t ineq1_checked = 0;
  std::uint64_t ineq1_failures = 0;
  std::uint64_t ineq2_checked = 0;
  std::uint64_t ineq2_failures = 0;
  /// (n,k) pairs where small_n_exact and recursion_applies both hold; expected to stay empty.
  std::uint64_t threshold_overlaps = 0;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

/// Reports for 2 <= k <= k_max, 2k <= n <= n_max, plus Eq-style sweeps:
/// inequality 1 for k >= 3 over the same range and inequality 2 for
/// 2 <= k <= min(k_max, 6), 2k-2 <= a <= 200, 1 <= b <= 2k-3.
SweepSummary bounds_sweep(int k_max, int n_max);

void to_json(nlohmann::json& j, const BoundsReport& r);
void from_json(const nlohmann::json& j, BoundsReport& r);

}  // namespace starfree

#include "starfree/bounds.hpp"

#include <algorithm>
#include <string>

#include "starfree/combinatorics.hpp"
#include "starfree/errors.hpp"
#include "starfree/hilton_milner.hpp"

namespace starfree {

std::int64_t recursion_threshold(int k) {
  const std::int64_t kk = k;
  return 2 * kk * kk * kk - 2 * kk * kk - 2 * kk + 4;
}

BoundsReport bounds_report(int n, int k) {
  if (k < 2 || n < 2 * k) {
    fail(ErrorCode::kInput, "bounds need n >= 2k >= 4, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.chi = static_cast<std::int64_t>(n) - 2 * k + 2;
  r.star_free_upper = 2 * static_cast<std::int64_t>(n) - 4 * k + 2;
  r.star_free_lower = std::max(2 * r.chi - 10, r.chi);
  if (k >= 81) r.refined_lower_k81 = std::max(2 * r.chi - 8, r.chi);
  try {
    r.hm_bound = hm_bound(n, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
  }
  r.small_n_exact = 3 * static_cast<std::int64_t>(n) <= 8 * static_cast<std::int64_t>(k);
  r.recursion_applies = n >= recursion_threshold(k);
  if (r.small_n_exact) r.exact_value_known = r.star_free_upper;
  r.conjectured_value = r.star_free_upper;
  return r;
}

bool ineq1_holds(int n, int k) {
  if (k < 3 || n < 2 * k) fail(ErrorCode::kInput, "inequality 1 needs k >= 3 and n >= 2k");
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  const unsigned __int128 lhs = hm_bound(n, k);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(uk) * binomial(un - 2, uk - 2);
  return lhs <= rhs;
}

bool ineq2_holds(std::int64_t a, std::int64_t b, int k) {
  if (a < 2 * k - 2 || b > 2 * k - 3) {
    fail(ErrorCode::kInput, "inequality 2 needs a >= 2k-2 and b <= 2k-3");
  }
  using i128 = __int128;
  const i128 left = 4 * static_cast<i128>(a) * (a - b - 2 * k + 1);
  const i128 middle_root = 2 * static_cast<i128>(a) - b - 2 * k + 1;
  const i128 middle = middle_root * middle_root;
  const i128 right = 4 * static_cast<i128>(a - b) * (a - b - 1);
  return left <= middle && middle <= right;
}

bool recursion_ratio_check(std::int64_t n, int k) {
  using i128 = __int128;
  const i128 kk = k;
  return static_cast<i128>(n) * (n - 1) >= 2 * static_cast<i128>(n - 2 * k + 1) * kk * kk * (kk - 1);
}

SweepSummary bounds_sweep(int k_max, int n_max) {
  SweepSummary summary;
  for (int k = 2; k <= k_max; ++k) {
    for (int n = 2 * k; n <= n_max; ++n) {
      BoundsReport r = bounds_report(n, k);
      if (r.recursion_applies && r.small_n_exact) ++summary.threshold_overlaps;
      summary.reports.push_back(r);
      if (k >= 3) {
        ++summary.ineq1_checked;
        if (!ineq1_holds(n, k)) ++summary.ineq1_failures;
      }
    }
  }
  for (int k = 2; k <= std::min(k_max, 6); ++k) {
    for (std::int64_t a = 2 * k - 2; a <= 200; ++a) {
      for (std::int64_t b = 0; b <= 2 * k - 3; ++b) {
        ++summary.ineq2_checked;
        if (!ineq2_holds(a, b, k)) ++summary.ineq2_failures;
      }
    }
  }
  return summary;
}

void to_json(nlohmann::json& j, const BoundsReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"k", r.k},
                     {"chi", r.chi},
                     {"star_free_upper", r.star_free_upper},
                     {"star_free_lower", r.star_free_lower},
                     {"refined_lower_k81", nullptr},
                     {"hm_bound", nullptr},
                     {"small_n_exact", r.small_n_exact},
                     {"recursion_applies", r.recursion_applies},
                     {"exact_value_known", nullptr},
                     {"conjectured_value", r.conjectured_value}};
  if (r.refined_lower_k81) j["refined_lower_k81"] = *r.refined_lower_k81;
  if (r.hm_bound) j["hm_bound"] = *r.hm_bound;
  if (r.exact_value_known) j["exact_value_known"] = *r.exact_value_known;
}

void from_json(const nlohmann::json& j, BoundsReport& r) {
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("chi").get_to(r.chi);
  j.at("star_free_upper").get_to(r.star_free_upper);
  j.at("star_free_lower").get_to(r.star_free_lower);
  r.refined_lower_k81.reset();
  if (!j.at("refined_lower_k81").is_null()) r.refined_lower_k81 = j.at("refined_lower_k81").get<std::int64_t>();
  r.hm_bound.reset();
  if (!j.at("hm_bound").is_null()) r.hm_bound = j.at("hm_bound").get<std::uint64_t>();
  j.at("small_n_exact").get_to(r.small_n_exact);
  j.at("recursion_applies").get_to(r.recursion_applies);
  r.exact_value_known.reset();
  if (!j.at("exact_value_known").is_null()) r.exact_value_known = j.at("exact_value_known").get<std::int64_t>();
  j.at("conjectured_value").get_to(r.conjectured_value);
}

}  // namespace starfree

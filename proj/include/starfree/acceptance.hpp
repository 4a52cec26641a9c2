#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace starfree {

struct AcceptanceOptions {
  std::uint64_t seed = 20240917;
  /// Run only criteria whose group or tag equals this (empty = all).
  std::string only;
  /// Replace the star-free verifier by one that rejects everything, to show
  /// the suite notices a broken verifier.
  bool inject_verifier_fault = false;
};

struct CriterionResult {
  int id = 0;
  std::string group;  ///< constructions, solver, fan, hm, bounds
  std::string tag;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;

  friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

/// Budget for the KG(6,2) star-free run; the run must finish within it.
inline constexpr std::uint64_t kFrontierNodeBudget = 50'000'000;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One line per criterion plus a summary line.
std::string format_acceptance_table(const std::vector<CriterionResult>& results,
                                    const AcceptanceOptions& options);

}  // namespace starfree

#pragma once

#include "json.hpp"
#include "starfree/acceptance.hpp"
#include "starfree/bounds.hpp"
#include "starfree/coloring.hpp"
#include "starfree/fan.hpp"
#include "starfree/solver.hpp"

namespace starfree {

void to_json(nlohmann::json& j, const Coloring& c);
void from_json(const nlohmann::json& j, Coloring& c);

void to_json(nlohmann::json& j, const DecisionRecord& r);
void from_json(const nlohmann::json& j, DecisionRecord& r);

void to_json(nlohmann::json& j, const SolveResult& r);
void from_json(const nlohmann::json& j, SolveResult& r);

/// Checkpoint files written when a solve runs out of budget.
void to_json(nlohmann::json& j, const ResumePoint& r);
void from_json(const nlohmann::json& j, ResumePoint& r);

void to_json(nlohmann::json& j, const SweepSummary& s);
void from_json(const nlohmann::json& j, SweepSummary& s);

/// Chains are written as lists of sign strings.
void to_json(nlohmann::json& j, const AlternatingCensus& c);
void from_json(const nlohmann::json& j, AlternatingCensus& c);

void to_json(nlohmann::json& j, const CriterionResult& r);
void from_json(const nlohmann::json& j, CriterionResult& r);

}  // namespace starfree

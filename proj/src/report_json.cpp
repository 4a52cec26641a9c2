#include "starfree/report_json.hpp"

#include "starfree/errors.hpp"

namespace starfree {

using nlohmann::json;

namespace {

Verdict parse_verdict(const std::string& text) {
  for (Verdict v : {Verdict::kSat, Verdict::kUnsat, Verdict::kUnknown}) {
    if (verdict_name(v) == text) return v;
  }
  fail(ErrorCode::kInput, "unknown verdict '" + text + "'");
}

}  // namespace

void to_json(json& j, const Coloring& c) {
  j = json{{"range", c.range()}, {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

void from_json(const json& j, Coloring& c) {
  c = Coloring(j.at("range").get<int>(), j.at("colors").get<std::vector<Color>>());
}

void to_json(json& j, const DecisionRecord& r) {
  j = json{{"t", r.t}, {"verdict", verdict_name(r.verdict)}, {"nodes", r.nodes}};
}

void from_json(const json& j, DecisionRecord& r) {
  r.t = j.at("t").get<int>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.nodes = j.at("nodes").get<std::uint64_t>();
}

void to_json(json& j, const SolveResult& r) {
  j = json{{"mode", mode_name(r.mode)},
           {"verdict", verdict_name(r.verdict)},
           {"optimum", r.optimum},
           {"proven_lower", r.proven_lower},
           {"best_upper", r.best_upper},
           {"witness", nullptr},
           {"nodes", r.stats.nodes},
           {"seconds", r.stats.seconds},
           {"decisions", r.decisions},
           {"checkpoint_t", r.checkpoint_t},
           {"checkpoint", r.checkpoint}};
  if (r.witness) j["witness"] = *r.witness;
}

void from_json(const json& j, SolveResult& r) {
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.optimum = j.at("optimum").get<int>();
  r.proven_lower = j.at("proven_lower").get<int>();
  r.best_upper = j.at("best_upper").get<int>();
  r.witness.reset();
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<Coloring>();
  r.stats.nodes = j.at("nodes").get<std::uint64_t>();
  r.stats.seconds = j.at("seconds").get<double>();
  r.decisions = j.at("decisions").get<std::vector<DecisionRecord>>();
  r.checkpoint_t = j.at("checkpoint_t").get<int>();
  r.checkpoint = j.at("checkpoint").get<std::vector<Color>>();
}

void to_json(json& j, const ResumePoint& r) {
  j = json{{"t", r.t}, {"path", r.path}, {"proven_lower", r.proven_lower}};
}

void from_json(const json& j, ResumePoint& r) {
  r.t = j.at("t").get<int>();
  r.path = j.at("path").get<std::vector<Color>>();
  r.proven_lower = j.at("proven_lower").get<int>();
}

void to_json(json& j, const SweepSummary& s) {
  j = json{{"reports", s.reports},
           {"ineq1_checked", s.ineq1_checked},
           {"ineq1_failures", s.ineq1_failures},
           {"ineq2_checked", s.ineq2_checked},
           {"ineq2_failures", s.ineq2_failures},
           {"threshold_overlaps", s.threshold_overlaps}};
}

void from_json(const json& j, SweepSummary& s) {
  s.reports = j.at("reports").get<std::vector<BoundsReport>>();
  s.ineq1_checked = j.at("ineq1_checked").get<std::uint64_t>();
  s.ineq1_failures = j.at("ineq1_failures").get<std::uint64_t>();
  s.ineq2_checked = j.at("ineq2_checked").get<std::uint64_t>();
  s.ineq2_failures = j.at("ineq2_failures").get<std::uint64_t>();
  s.threshold_overlaps = j.at("threshold_overlaps").get<std::uint64_t>();
}

void to_json(json& j, const AlternatingCensus& c) {
  json chains = json::array();
  for (const Chain& chain : c.positive_chains) {
    json row = json::array();
    for (const SignVector& w : chain) row.push_back(w.to_text());
    chains.push_back(std::move(row));
  }
  j = json{{"chains", c.chains},
           {"leading_positive", c.leading_positive},
           {"leading_negative", c.leading_negative},
           {"positive_chains", std::move(chains)}};
}

void from_json(const json& j, AlternatingCensus& c) {
  c.chains = j.at("chains").get<std::uint64_t>();
  c.leading_positive = j.at("leading_positive").get<std::uint64_t>();
  c.leading_negative = j.at("leading_negative").get<std::uint64_t>();
  c.positive_chains.clear();
  for (const json& row : j.at("positive_chains")) {
    Chain chain;
    for (const json& w : row) chain.push_back(SignVector::parse(w.get<std::string>()));
    c.positive_chains.push_back(std::move(chain));
  }
}

void to_json(json& j, const CriterionResult& r) {
  j = json{{"id", r.id},         {"group", r.group},   {"tag", r.tag},         {"title", r.title},
           {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}};
}

void from_json(const json& j, CriterionResult& r) {
  r.id = j.at("id").get<int>();
  r.group = j.at("group").get<std::string>();
  r.tag = j.at("tag").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.detail = j.at("detail").get<std::string>();
  r.seconds = j.at("seconds").get<double>();
}

}  // namespace starfree

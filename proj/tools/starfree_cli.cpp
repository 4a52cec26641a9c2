#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "starfree/acceptance.hpp"
#include "starfree/bounds.hpp"
#include "starfree/cnf.hpp"
#include "starfree/coloring.hpp"
#include "starfree/coloring_io.hpp"
#include "starfree/constructions.hpp"
#include "starfree/errors.hpp"
#include "starfree/fan.hpp"
#include "starfree/hilton_milner.hpp"
#include "starfree/kneser_graph.hpp"
#include "starfree/report_json.hpp"
#include "starfree/solver.hpp"

using namespace starfree;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput:
      return kExitUsage;
    case ErrorCode::kOverflow:
    case ErrorCode::kResource:
      return kExitResource;
    default:
      return kExitFailed;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInput, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorCode::kInput, "cannot write '" + path + "'");
}

Mode mode_arg(const std::string& text) {
  try {
    return parse_mode(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

/// The graph a command works on: KG(n,k) from --kneser or a DIMACS file from --graph.
struct Instance {
  std::optional<KneserGraph> kneser;
  Graph generic;
  std::string name;

  const Graph& graph() const { return kneser ? kneser->graph() : generic; }
};

Instance load_instance(const std::vector<int>& kneser, const std::string& graph_path) {
  Instance inst;
  if (!kneser.empty()) {
    inst.kneser = KneserGraph::build(kneser[0], kneser[1]);
    inst.name = "KG(" + std::to_string(kneser[0]) + "," + std::to_string(kneser[1]) + ")";
  } else if (!graph_path.empty()) {
    inst.generic = parse_dimacs(read_file(graph_path));
    inst.name = graph_path;
  } else {
    throw UsageError("one of --kneser or --graph is required");
  }
  return inst;
}

/// A coloring file together with the graph it colors.
struct LoadedColoring {
  ColoringFile file;
  Instance instance;
};

LoadedColoring load_coloring(const std::string& path, const std::string& graph_path) {
  LoadedColoring out{parse_coloring_file(read_file(path)), {}};
  if (out.file.kneser) {
    out.instance = load_instance({out.file.n, out.file.k}, "");
  } else {
    if (graph_path.empty()) throw UsageError("GRAPH coloring files need --graph <dimacs file>");
    out.instance = load_instance({}, graph_path);
    if (out.instance.generic.vertex_count() != out.file.coloring.size()) {
      fail(ErrorCode::kInput, "coloring has " + std::to_string(out.file.coloring.size()) +
                                  " vertices, graph has " +
                                  std::to_string(out.instance.generic.vertex_count()));
    }
  }
  return out;
}

std::string kneser_name(int n, int k) {
  return "KG(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// kneser gen

struct KneserGenArgs {
  int n = 0;
  int k = 0;
  std::string dimacs;
  std::uint64_t max_vertices = KneserOptions{}.max_vertices;
};

int run_kneser_gen(const KneserGenArgs& a) {
  KneserOptions options;
  options.max_vertices = a.max_vertices;
  const KneserGraph g = KneserGraph::build(a.n, a.k, options);
  std::cout << kneser_name(a.n, a.k) << ": " << g.vertex_count() << " vertices, "
            << g.graph().edge_count() << " edges, degree " << g.degree() << '\n';
  if (!a.dimacs.empty()) write_output(a.dimacs, export_dimacs(g.graph()));
  return kExitOk;
}

// color verify / construct

struct VerifyArgs {
  std::string mode;
  std::string file;
  std::string graph;
};

int run_color_verify(const VerifyArgs& a) {
  const Mode mode = mode_arg(a.mode);
  const LoadedColoring lc = load_coloring(a.file, a.graph);
  const auto violation = verify(lc.instance.graph(), lc.file.coloring, mode);
  if (violation) {
    std::cout << "FAIL " << mode_name(mode) << ": " << describe(*violation) << '\n';
    return kExitFailed;
  }
  std::cout << "OK " << mode_name(mode) << " coloring of " << lc.instance.name << ", range "
            << lc.file.coloring.range() << ", value " << coloring_value(lc.file.coloring) << '\n';
  return kExitOk;
}

struct ConstructArgs {
  std::string scheme;
  std::vector<int> kneser;
  std::string input;
  std::string graph;
  std::string output;
  int j = 0;
};

std::string permutation_text(const std::vector<int>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i + 1) + "->" + std::to_string(perm[i]);
  }
  return out;
}

int run_color_construct(const ConstructArgs& a) {
  if (a.scheme == "ladder") {
    if (a.kneser.empty()) throw UsageError("ladder needs --kneser <n> <k>");
    const int n = a.kneser[0];
    const int k = a.kneser[1];
    write_output(a.output, format_kneser_coloring(n, k, ladder_coloring(n, k), "ladder coloring"));
    return kExitOk;
  }
  if (a.input.empty()) throw UsageError(a.scheme + " needs --input <coloring file>");
  const LoadedColoring lc = load_coloring(a.input, a.graph);
  if (a.scheme == "double") {
    ColoringFile out = lc.file;
    out.coloring = double_coloring(lc.instance.graph(), lc.file.coloring);
    write_output(a.output, format_coloring_file(out, "doubled coloring"));
    return kExitOk;
  }
  if (!lc.file.kneser) throw UsageError(a.scheme + " needs a KNESER coloring file");
  const int n = lc.file.n;
  const int k = lc.file.k;
  if (a.scheme == "extend") {
    const Coloring out = extend_coloring(lc.file.coloring, n, k);
    write_output(a.output, format_kneser_coloring(n + 1, k, out, "extended from " + kneser_name(n, k)));
    return kExitOk;
  }
  if (a.scheme == "reduce") {
    const KneserGraph& g = *lc.instance.kneser;
    Color j = a.j;
    if (j == 0) {
      const auto found = smallest_qualifying_class(g, lc.file.coloring);
      if (!found) {
        fail(ErrorCode::kPrecondition,
             "no color class reaches the Hilton-Milner bound " + std::to_string(hm_bound(n, k)));
      }
      j = *found;
    }
    const ReduceResult r = reduce_coloring(g, lc.file.coloring, j);
    const std::string comment = "reduced from " + kneser_name(n, k) + " at class " + std::to_string(j) +
                                ", common element " + std::to_string(r.common_element) +
                                "\npermutation " + permutation_text(r.permutation);
    write_output(a.output, format_kneser_coloring(n - 1, k, r.coloring, comment));
    return kExitOk;
  }
  throw UsageError("unknown scheme '" + a.scheme + "'");
}

// hm

int run_hm_bound(int n, int k) {
  std::cout << hm_bound(n, k) << '\n';
  return kExitOk;
}

int run_hm_oracle(int n, int k) {
  std::cerr << "warning: exhaustive search over intersecting families of " << kneser_name(n, k)
            << "; runtime grows quickly with C(n,k)\n";
  const NonStarResult r = max_nonstar_intersecting(n, k);
  std::cout << "max non-star intersecting family: " << r.size << " (Hilton-Milner bound "
            << hm_bound(n, k) << ", nodes " << r.nodes << ")\n";
  for (const Subset& s : r.witness) std::cout << "  " << to_text(s) << '\n';
  return kExitOk;
}

// solve / export

struct SolveArgs {
  std::string mode;
  std::vector<int> kneser;
  std::string graph;
  std::optional<int> lower;
  std::optional<int> upper;
  std::uint64_t budget = SolverOptions{}.node_budget;
  unsigned threads = 1;
  bool break_automorphisms = false;
  bool no_reflection = false;
  std::string checkpoint;
  std::string resume;
  std::string output;
  bool json_out = false;
};

int run_solve(const SolveArgs& a) {
  const Mode mode = mode_arg(a.mode);
  if (a.break_automorphisms && a.kneser.empty()) {
    throw UsageError("--break-automorphisms is only available with --kneser");
  }
  const Instance inst = load_instance(a.kneser, a.graph);
  const Bracket bracket =
      inst.kneser ? kneser_bracket(inst.kneser->n(), inst.kneser->k(), mode) : generic_bracket(inst.graph());
  const int lower = a.lower.value_or(bracket.lower);
  const int upper = a.upper.value_or(bracket.upper);

  SolverOptions options;
  options.node_budget = a.budget;
  options.threads = std::max(1u, a.threads);
  options.break_reflection = !a.no_reflection;
  options.assume_vertex_transitive = a.break_automorphisms;

  std::optional<ResumePoint> resume;
  if (!a.resume.empty()) {
    const json saved = json::parse(read_file(a.resume));
    if (saved.at("instance").get<std::string>() != inst.name ||
        saved.at("mode").get<std::string>() != mode_name(mode)) {
      throw UsageError("checkpoint was written for " + saved.at("mode").get<std::string>() + " on " +
                       saved.at("instance").get<std::string>());
    }
    resume = saved.at("resume").get<ResumePoint>();
  }

  const SolveResult r = optimize(inst.graph(), mode, lower, upper, options, resume ? &*resume : nullptr);

  if (r.verdict == Verdict::kUnknown && !a.checkpoint.empty()) {
    const ResumePoint point{r.checkpoint_t, r.checkpoint, r.proven_lower};
    const json saved{{"instance", inst.name}, {"mode", mode_name(mode)}, {"resume", point}};
    write_output(a.checkpoint, saved.dump(2) + "\n");
  }

  std::ostringstream stats;
  stats << "instance " << inst.name << "\nmode " << mode_name(mode) << "\nsearch range [" << lower
        << "," << upper << "]\nverdict " << verdict_name(r.verdict) << '\n';
  if (r.verdict == Verdict::kSat) stats << "optimum " << r.optimum << '\n';
  if (r.verdict == Verdict::kUnknown) {
    stats << "bracket [" << r.proven_lower << "," << r.best_upper << "]\n";
    stats << "stopped at t=" << r.checkpoint_t
          << (a.checkpoint.empty() ? "" : ", checkpoint written to " + a.checkpoint) << '\n';
  }
  for (const DecisionRecord& d : r.decisions) {
    stats << "t=" << d.t << ' ' << verdict_name(d.verdict) << " nodes=" << d.nodes << '\n';
  }
  stats << "nodes " << r.stats.nodes << "\nseconds " << r.stats.seconds << '\n';

  std::string witness_text;
  if (r.witness) {
    witness_text = inst.kneser ? format_kneser_coloring(inst.kneser->n(), inst.kneser->k(), *r.witness)
                               : format_graph_coloring(*r.witness);
  }

  if (a.json_out) {
    std::cout << json(r).dump(2) << '\n';
    if (r.witness && !a.output.empty()) write_output(a.output, witness_text);
  } else if (a.output.empty() || a.output == "-") {
    std::string block;
    std::istringstream lines(stats.str());
    for (std::string line; std::getline(lines, line);) block += "# " + line + '\n';
    std::cout << block << witness_text;
  } else {
    std::cout << stats.str();
    if (r.witness) write_output(a.output, witness_text);
  }

  switch (r.verdict) {
    case Verdict::kSat:
      return kExitOk;
    case Verdict::kUnsat:
      return kExitFailed;
    default:
      return kExitResource;
  }
}

struct ExportArgs {
  std::string mode;
  int t = 0;
  std::vector<int> kneser;
  std::string graph;
  std::string output;
};

int run_export_cnf(const ExportArgs& a) {
  const Mode mode = mode_arg(a.mode);
  const Instance inst = load_instance(a.kneser, a.graph);
  write_output(a.output, export_cnf(inst.graph(), a.t, mode));
  return kExitOk;
}

// fan

std::string chain_text(const Chain& chain) {
  std::string out;
  for (const SignVector& w : chain) {
    if (!out.empty()) out += ' ';
    out += w.to_text();
  }
  return out;
}

int run_fan_chains(int n, bool count_only) {
  if (count_only) {
    std::cout << maximal_chain_count(n) << '\n';
    return kExitOk;
  }
  enumerate_maximal_chains(n, [](const Chain& chain) { std::cout << chain_text(chain) << '\n'; });
  return kExitOk;
}

int run_fan_validate(const std::string& path) {
  const FanLabeling labeling = parse_labeling_file(read_file(path));
  if (const auto v = validate_labeling(labeling)) {
    std::cout << "FAIL: " << describe(*v) << '\n';
    return kExitFailed;
  }
  std::cout << "OK: antipodal labeling without complementary edges\n";
  return kExitOk;
}

int run_fan_census(const std::string& path, bool list, unsigned threads, bool json_out) {
  const FanLabeling labeling = parse_labeling_file(read_file(path));
  const AlternatingCensus c = count_alternating(labeling, list, std::max(1u, threads));
  if (json_out) {
    std::cout << json(c).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "maximal chains " << c.chains << "\nleading positive alternating " << c.leading_positive
            << "\nleading negative alternating " << c.leading_negative << '\n';
  for (const Chain& chain : c.positive_chains) std::cout << "  " << chain_text(chain) << '\n';
  return kExitOk;
}

int run_fan_label(const std::string& path, const std::string& output) {
  const ColoringFile file = parse_coloring_file(read_file(path));
  if (!file.kneser) throw UsageError("fan label needs a KNESER coloring file");
  const KneserGraph g = KneserGraph::build(file.n, file.k);
  const auto colors = file.coloring.colors();
  const int lowest = colors.empty() ? 1 : *std::min_element(colors.begin(), colors.end());
  const int offset = std::max(0, 2 * file.k - 1 - lowest);
  const Coloring shifted = offset > 0 ? shift_colors(file.coloring, offset) : file.coloring;
  const FanLabeling labeling = build_coloring_labeling(g, shifted);
  std::string text = "# labeling from a coloring of " + kneser_name(file.n, file.k);
  if (offset > 0) text += ", colors shifted by " + std::to_string(offset);
  write_output(output, text + "\n" + format_labeling_file(labeling));
  return kExitOk;
}

// bounds

std::string optional_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

int run_bounds_report(int n, int k, bool json_out) {
  const BoundsReport r = bounds_report(n, k);
  if (json_out) {
    std::cout << json(r).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << kneser_name(n, k) << '\n'
            << "  chromatic number        " << r.chi << '\n'
            << "  star-free lower bound   " << r.star_free_lower << '\n'
            << "  star-free upper bound   " << r.star_free_upper << '\n';
  if (r.refined_lower_k81) std::cout << "  refined lower (k>=81)   " << *r.refined_lower_k81 << '\n';
  std::cout << "  Hilton-Milner bound     " << (r.hm_bound ? std::to_string(*r.hm_bound) : "beyond 64 bits") << '\n'
            << "  small-n regime (3n<=8k) " << (r.small_n_exact ? "yes" : "no") << '\n'
            << "  large-n regime          " << (r.recursion_applies ? "yes" : "no") << " (n >= "
            << recursion_threshold(k) << ")\n"
            << "  exact value             " << optional_text(r.exact_value_known) << '\n'
            << "  conjectured value       " << r.conjectured_value << '\n';
  return kExitOk;
}

int run_bounds_sweep(int k_max, int n_max, bool json_out) {
  const SweepSummary s = bounds_sweep(k_max, n_max);
  if (json_out) {
    std::cout << json(s).dump(2) << '\n';
  } else {
    std::cout << "   n   k  chi  lower  upper  exact  conj  small  large\n";
    for (const BoundsReport& r : s.reports) {
      char line[128];
      std::snprintf(line, sizeof line, "%4d %3d %4lld %6lld %6lld %6s %5lld %6s %6s\n", r.n, r.k,
                    static_cast<long long>(r.chi), static_cast<long long>(r.star_free_lower),
                    static_cast<long long>(r.star_free_upper), optional_text(r.exact_value_known).c_str(),
                    static_cast<long long>(r.conjectured_value), r.small_n_exact ? "yes" : "no",
                    r.recursion_applies ? "yes" : "no");
      std::cout << line;
    }
    std::cout << "inequality 1: " << s.ineq1_checked << " checked, " << s.ineq1_failures << " failures\n"
              << "inequality 2: " << s.ineq2_checked << " checked, " << s.ineq2_failures << " failures\n";
  }
  return s.ineq1_failures + s.ineq2_failures == 0 ? kExitOk : kExitFailed;
}

// reproduce-all

int run_reproduce(const AcceptanceOptions& options, bool json_out) {
  const auto results = run_acceptance(options);
  if (json_out) {
    std::cout << json{{"seed", options.seed}, {"criteria", results}}.dump(2) << '\n';
  } else {
    std::cout << format_acceptance_table(results, options);
  }
  if (results.empty()) {
    std::cerr << "error[input]: no criterion matches '" << options.only << "'\n";
    return kExitUsage;
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return ok ? kExitOk : kExitFailed;
}

void add_instance_options(CLI::App* cmd, std::vector<int>& kneser, std::string& graph) {
  auto* kn = cmd->add_option("--kneser", kneser, "Kneser graph KG(n,k)")->expected(2);
  auto* gr = cmd->add_option("--graph", graph, "DIMACS graph file");
  kn->excludes(gr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-free and local colorings of Kneser graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  // kneser gen
  KneserGenArgs gen;
  auto* kneser = app.add_subcommand("kneser", "Kneser graph generation")->require_subcommand(1);
  auto* kneser_gen = kneser->add_subcommand("gen", "Build KG(n,k)");
  kneser_gen->add_option("n", gen.n)->required();
  kneser_gen->add_option("k", gen.k)->required();
  kneser_gen->add_option("--dimacs", gen.dimacs, "Write DIMACS edge file ('-' for stdout)");
  kneser_gen->add_option("--max-vertices", gen.max_vertices, "Cap on C(n,k)");
  kneser_gen->callback([&] { action = [&] { return run_kneser_gen(gen); }; });

  // color
  auto* color = app.add_subcommand("color", "Coloring verification and constructions")->require_subcommand(1);
  VerifyArgs verify_args;
  auto* color_verify = color->add_subcommand("verify", "Check a coloring file");
  color_verify->add_option("--mode", verify_args.mode, "proper | star-free | local")->required();
  color_verify->add_option("file", verify_args.file)->required();
  color_verify->add_option("--graph", verify_args.graph, "DIMACS graph for GRAPH coloring files");
  color_verify->callback([&] { action = [&] { return run_color_verify(verify_args); }; });

  ConstructArgs construct_args;
  auto* color_construct = color->add_subcommand("construct", "Build or transform a coloring");
  color_construct->add_option("--scheme", construct_args.scheme, "ladder | double | extend | reduce")
      ->required()
      ->check(CLI::IsMember({"ladder", "double", "extend", "reduce"}));
  color_construct->add_option("--kneser", construct_args.kneser, "KG(n,k) for the ladder scheme")->expected(2);
  color_construct->add_option("-i,--input", construct_args.input, "Input coloring file");
  color_construct->add_option("--graph", construct_args.graph, "DIMACS graph for GRAPH coloring files");
  color_construct->add_option("--class", construct_args.j, "Color class to collapse (reduce)");
  color_construct->add_option("-o,--output", construct_args.output, "Output file (default stdout)");
  color_construct->callback([&] { action = [&] { return run_color_construct(construct_args); }; });

  // hm
  int hm_n = 0;
  int hm_k = 0;
  auto* hm = app.add_subcommand("hm", "Hilton-Milner bound and exhaustive check")->require_subcommand(1);
  auto* hm_bound_cmd = hm->add_subcommand("bound", "C(n-1,k-1) - C(n-k-1,k-1) + 2");
  auto* hm_oracle_cmd = hm->add_subcommand("oracle", "Largest intersecting family without a common element");
  for (auto* cmd : {hm_bound_cmd, hm_oracle_cmd}) {
    cmd->add_option("n", hm_n)->required();
    cmd->add_option("k", hm_k)->required();
  }
  hm_bound_cmd->callback([&] { action = [&] { return run_hm_bound(hm_n, hm_k); }; });
  hm_oracle_cmd->callback([&] { action = [&] { return run_hm_oracle(hm_n, hm_k); }; });

  // solve
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Exact chromatic number in the given mode");
  solve->add_option("mode", solve_args.mode, "proper | star-free | local")->required();
  add_instance_options(solve, solve_args.kneser, solve_args.graph);
  solve->add_option("--lower", solve_args.lower, "First range tried");
  solve->add_option("--upper", solve_args.upper, "Last range tried");
  solve->add_option("--budget", solve_args.budget, "Node budget per decision");
  solve->add_option("--threads", solve_args.threads, "Worker threads");
  solve->add_flag("--break-automorphisms", solve_args.break_automorphisms,
                  "Fix the first vertex's color using vertex transitivity");
  solve->add_flag("--no-reflection", solve_args.no_reflection, "Disable color reflection symmetry breaking");
  solve->add_option("--checkpoint", solve_args.checkpoint, "Write a resume file when the budget runs out");
  solve->add_option("--resume", solve_args.resume, "Continue from a checkpoint file");
  solve->add_option("-o,--output", solve_args.output, "Witness coloring file");
  solve->add_flag("--json", solve_args.json_out, "Print the result as JSON");
  solve->callback([&] { action = [&] { return run_solve(solve_args); }; });

  // export cnf
  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Export encodings")->require_subcommand(1);
  auto* export_cnf_cmd = export_cmd->add_subcommand("cnf", "DIMACS CNF for range t");
  export_cnf_cmd->add_option("mode", export_args.mode)->required();
  export_cnf_cmd->add_option("t", export_args.t)->required();
  add_instance_options(export_cnf_cmd, export_args.kneser, export_args.graph);
  export_cnf_cmd->add_option("-o,--output", export_args.output, "Output file (default stdout)");
  export_cnf_cmd->callback([&] { action = [&] { return run_export_cnf(export_args); }; });

  // fan
  auto* fan = app.add_subcommand("fan", "Labelings of the subdivided cross polytope")->require_subcommand(1);
  int chains_n = 0;
  bool chains_count = false;
  auto* fan_chains = fan->add_subcommand("chains", "Maximal chains of nonzero sign vectors");
  fan_chains->add_option("n", chains_n)->required();
  fan_chains->add_flag("--count", chains_count, "Print only the number of chains");
  fan_chains->callback([&] { action = [&] { return run_fan_chains(chains_n, chains_count); }; });

  std::string fan_file;
  auto* fan_validate = fan->add_subcommand("validate", "Antipodality and complementary edges");
  fan_validate->add_option("file", fan_file)->required();
  fan_validate->callback([&] { action = [&] { return run_fan_validate(fan_file); }; });

  bool census_list = false;
  bool census_json = false;
  unsigned census_threads = 1;
  auto* fan_census = fan->add_subcommand("census", "Count alternating maximal chains");
  fan_census->add_option("file", fan_file)->required();
  fan_census->add_flag("--list", census_list, "List leading-positive alternating chains");
  fan_census->add_option("--threads", census_threads, "Worker threads");
  fan_census->add_flag("--json", census_json, "Print the census as JSON");
  fan_census->callback(
      [&] { action = [&] { return run_fan_census(fan_file, census_list, census_threads, census_json); }; });

  std::string label_output;
  auto* fan_label = fan->add_subcommand("label", "Labeling derived from a star-free coloring");
  fan_label->add_option("--from-coloring", fan_file, "KNESER coloring file")->required();
  fan_label->add_option("-o,--output", label_output, "Output file (default stdout)");
  fan_label->callback([&] { action = [&] { return run_fan_label(fan_file, label_output); }; });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds")->require_subcommand(1);
  int bounds_n = 0;
  int bounds_k = 0;
  bool bounds_json = false;
  auto* bounds_report_cmd = bounds->add_subcommand("report", "Bounds for KG(n,k)");
  bounds_report_cmd->add_option("n", bounds_n)->required();
  bounds_report_cmd->add_option("k", bounds_k)->required();
  bounds_report_cmd->add_flag("--json", bounds_json);
  bounds_report_cmd->callback([&] { action = [&] { return run_bounds_report(bounds_n, bounds_k, bounds_json); }; });

  int sweep_k = 8;
  int sweep_n = 60;
  auto* bounds_sweep_cmd = bounds->add_subcommand("sweep", "Bounds table and inequality checks");
  bounds_sweep_cmd->add_option("--k-max", sweep_k);
  bounds_sweep_cmd->add_option("--n-max", sweep_n);
  bounds_sweep_cmd->add_flag("--json", bounds_json);
  bounds_sweep_cmd->callback([&] { action = [&] { return run_bounds_sweep(sweep_k, sweep_n, bounds_json); }; });

  // reproduce-all
  AcceptanceOptions acceptance;
  bool acceptance_json = false;
  auto* reproduce = app.add_subcommand("reproduce-all", "Run every acceptance check");
  reproduce->add_option("--only", acceptance.only, "Restrict to a group, tag or criterion number");
  reproduce->add_option("--seed", acceptance.seed, "Seed for randomized checks");
  reproduce->add_flag("--inject-fault", acceptance.inject_verifier_fault,
                      "Run with a broken star-free verifier");
  reproduce->add_flag("--json", acceptance_json);
  reproduce->callback([&] { action = [&] { return run_reproduce(acceptance, acceptance_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error[input]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return kExitFailed;
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "starfree/coloring.hpp"
#include "starfree/graph.hpp"

namespace starfree {

enum class Verdict { kSat, kUnsat, kUnknown };

std::string_view verdict_name(Verdict v);

struct SolverOptions {
  /// Color assignments tried before giving up with kUnknown.
  std::uint64_t node_budget = 1'000'000'000;
  unsigned threads = 1;
  /// The reflection a -> t+1-a preserves every mode; the first branched vertex
  /// is restricted to colors 1..ceil(t/2).
  bool break_reflection = true;
  /// Sound only for vertex-transitive graphs such as KG(n,k): combined with
  /// the color shift symmetry it pins the first branched vertex to color 1.
  bool assume_vertex_transitive = false;
  /// After each assignment, fail if a vertex within distance two has no
  /// admissible color left.
  bool forward_check = true;
  /// Colors of a branching prefix saved by a previous run (DecideResult::
  /// checkpoint); the search restarts at that node. Single-threaded only.
  std::vector<Color> resume_path;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct DecideResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Coloring> witness;
  SearchStats stats;
  /// For kUnknown: the branching prefix at which the search stopped. Every
  /// lexicographically smaller prefix has been refuted.
  std::vector<Color> checkpoint;
};

/// Vertices by descending degree, ties by ascending index.
std::vector<Vertex> branching_order(const Graph& g);

/// Does `g` admit a coloring of the given mode with range t? SAT answers carry
/// a verified witness, the least one in branching order; kUnsat means the
/// search space was exhausted.
DecideResult decide(const Graph& g, int t, Mode mode, const SolverOptions& options = {});

struct DecisionRecord {
  int t = 0;
  Verdict verdict = Verdict::kUnknown;
  std::uint64_t nodes = 0;

  friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

struct SolveResult {
  Mode mode = Mode::kProper;
  /// kSat: `optimum` is exact; kUnknown: the answer lies in
  /// [proven_lower, best_upper]; kUnsat: nothing in the requested range.
  Verdict verdict = Verdict::kUnknown;
  int optimum = 0;
  int proven_lower = 0;
  int best_upper = 0;
  std::optional<Coloring> witness;
  SearchStats stats;
  std::vector<DecisionRecord> decisions;
  /// For kUnknown: the range whose decision ran out of budget and where it stopped.
  int checkpoint_t = 0;
  std::vector<Color> checkpoint;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Where an interrupted optimize run left off.
struct ResumePoint {
  int t = 0;
  std::vector<Color> path;
  /// Ranges below this were refuted by the interrupted run.
  int proven_lower = 1;

  friend bool operator==(const ResumePoint&, const ResumePoint&) = default;
};

/// Scans t upward from `lower` until decide succeeds, then makes sure t-1 was
/// refuted by the search itself. `lower` is a hint, not an assumption. With a
/// resume point the scan restarts at resume->t from the saved branch.
SolveResult optimize(const Graph& g, Mode mode, int lower, int upper,
                     const SolverOptions& options = {}, const ResumePoint* resume = nullptr);

struct Bracket {
  int lower = 1;
  int upper = 1;
};

/// [max{n-2k+2, 2(n-2k+2)-10}, 2n-4k+2] for star-free and local searches on
/// KG(n,k); [n-2k+2, n-2k+2] for proper.
Bracket kneser_bracket(int n, int k, Mode mode);
/// [1, 2g-1] where g is the size of a greedy proper coloring.
Bracket generic_bracket(const Graph& g);

}  // namespace starfree

#include "starfree/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "starfree/errors.hpp"

namespace starfree {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSat: return "SAT";
    case Verdict::kUnsat: return "UNSAT";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
  std::uint64_t limit = 0;
  std::atomic<std::uint64_t> used{0};
  bool exhausted() const { return used.load(std::memory_order_relaxed) >= limit; }
};

// Triangles through each vertex, as pairs of the other two corners.
using TriangleLists = std::vector<std::vector<std::pair<Vertex, Vertex>>>;

TriangleLists triangles_by_vertex(const Graph& g) {
  TriangleLists out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          const Vertex w = *i;
          out[u].emplace_back(v, w);
          out[v].emplace_back(u, w);
          out[w].emplace_back(u, v);
          ++i;
          ++j;
        }
      }
    }
  }
  return out;
}

// Depth-first search over colors of vertices in a fixed order. Positions below
// `floor` are pinned by a prefix and never revisited.
class Search {
 public:
  Search(const Graph& g, int t, Mode mode, const SolverOptions& options,
         const std::vector<Vertex>& order, const TriangleLists* triangles)
      : g_(g),
        t_(t),
        mode_(mode),
        options_(options),
        order_(order),
        triangles_(triangles),
        stride_(static_cast<std::size_t>(t) + 2),
        color_(g.vertex_count(), 0),
        count_(g.vertex_count() * stride_, 0),
        next_(g.vertex_count() + 1, 1),
        max_used_(g.vertex_count() + 1, 0),
        stamp_(g.vertex_count(), 0) {}

  /// Pins order[0..prefix.size()) to the given colors. False if the prefix
  /// violates a constraint, the symmetry restrictions, or forward checking.
  bool apply_prefix(std::span<const Color> prefix) {
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
      const Vertex v = order_[pos];
      const Color a = prefix[pos];
      if (a < 1 || a > max_color(pos) || !allowed(v, a)) return false;
      assign(pos, v, a);
      next_[pos] = a + 1;
      if (options_.forward_check && !forward_check(v)) return false;
    }
    depth_ = prefix.size();
    next_[depth_] = 1;
    return true;
  }

  template <typename StopFn>
  Verdict run(std::size_t floor, StopFn&& should_stop) {
    std::size_t pos = depth_;
    const std::size_t n = g_.vertex_count();
    for (;;) {
      if (pos == n) {
        depth_ = pos;
        return Verdict::kSat;
      }
      const Vertex v = order_[pos];
      const Color hi = max_color(pos);
      bool placed = false;
      for (Color a = next_[pos]; a <= hi; ++a) {
        if (!allowed(v, a)) continue;
        if ((++local_nodes_ & 0x3FF) == 0 && should_stop(flush_nodes())) {
          next_[pos] = a;
          depth_ = pos;
          return Verdict::kUnknown;
        }
        assign(pos, v, a);
        if (options_.forward_check && !forward_check(v)) {
          unassign(v);
          continue;
        }
        next_[pos] = a + 1;
        ++pos;
        next_[pos] = 1;
        placed = true;
        break;
      }
      if (placed) continue;
      if (pos == floor) {
        depth_ = pos;
        return Verdict::kUnsat;
      }
      --pos;
      unassign(order_[pos]);
    }
  }

  /// Colors on the current branch; the node at `depth_` is still open.
  std::vector<Color> path() const {
    std::vector<Color> out;
    for (std::size_t pos = 0; pos < depth_; ++pos) out.push_back(color_[order_[pos]]);
    return out;
  }

  Coloring witness() const { return Coloring(t_, {color_.begin(), color_.end()}); }

  std::uint64_t flush_nodes() {
    total_nodes_ += local_nodes_ - flushed_;
    if (shared_ != nullptr) shared_->used.fetch_add(local_nodes_ - flushed_, std::memory_order_relaxed);
    flushed_ = local_nodes_;
    return total_nodes_;
  }

  void attach(SharedBudget* shared) { shared_ = shared; }
  std::uint64_t nodes() const { return local_nodes_; }

 private:
  Color max_color(std::size_t pos) const {
    Color hi = t_;
    if (mode_ == Mode::kProper) hi = std::min<Color>(hi, max_used_[pos] + 1);
    if (pos == 0) {
      if (options_.assume_vertex_transitive) hi = 1;
      if (options_.break_reflection) hi = std::min<Color>(hi, (t_ + 1) / 2);
    }
    return hi;
  }

  int count(Vertex v, Color a) const { return count_[v * stride_ + static_cast<std::size_t>(a)]; }

  bool allowed(Vertex y, Color a) const {
    if (count(y, a) > 0) return false;
    if (mode_ == Mode::kProper) return true;
    const int below = count(y, a - 1);
    const int above = a + 1 <= t_ ? count(y, a + 1) : 0;
    if (below >= 2 || above >= 2) return false;
    if (below > 0 || above > 0) {
      // y would be the second neighbor colored a around a center colored a+-1
      for (Vertex z : g_.neighbors(y)) {
        const Color cz = color_[z];
        if ((cz == a - 1 || cz == a + 1) && count(z, a) > 0) return false;
      }
    }
    if (mode_ == Mode::kLocal) {
      for (auto [z, w] : (*triangles_)[y]) {
        const Color cz = color_[z];
        const Color cw = color_[w];
        if (cz == 0 || cw == 0) continue;
        std::array<Color, 3> c{a, cz, cw};
        std::sort(c.begin(), c.end());
        if (c[1] == c[0] + 1 && c[2] == c[1] + 1) return false;
      }
    }
    return true;
  }

  bool has_option(Vertex y) const {
    for (Color a = 1; a <= t_; ++a) {
      if (allowed(y, a)) return true;
    }
    return false;
  }

  bool forward_check(Vertex x) {
    ++stamp_value_;
    stamp_[x] = stamp_value_;
    for (Vertex y : g_.neighbors(x)) {
      if (stamp_[y] == stamp_value_) continue;
      stamp_[y] = stamp_value_;
      if (color_[y] == 0 && !has_option(y)) return false;
    }
    if (mode_ == Mode::kProper) return true;
    for (Vertex y : g_.neighbors(x)) {
      for (Vertex z : g_.neighbors(y)) {
        if (stamp_[z] == stamp_value_) continue;
        stamp_[z] = stamp_value_;
        if (color_[z] == 0 && !has_option(z)) return false;
      }
    }
    return true;
  }

  void assign(std::size_t pos, Vertex v, Color a) {
    color_[v] = a;
    for (Vertex u : g_.neighbors(v)) ++count_[u * stride_ + static_cast<std::size_t>(a)];
    max_used_[pos + 1] = std::max(max_used_[pos], a);
  }

  void unassign(Vertex v) {
    const Color a = color_[v];
    for (Vertex u : g_.neighbors(v)) --count_[u * stride_ + static_cast<std::size_t>(a)];
    color_[v] = 0;
  }

  const Graph& g_;
  const int t_;
  const Mode mode_;
  const SolverOptions& options_;
  const std::vector<Vertex>& order_;
  const TriangleLists* triangles_;
  const std::size_t stride_;
  std::vector<Color> color_;
  std::vector<int> count_;
  std::vector<Color> next_;
  std::vector<Color> max_used_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_value_ = 0;
  std::size_t depth_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_ = 0;
  std::uint64_t total_nodes_ = 0;
  SharedBudget* shared_ = nullptr;
};

struct Task {
  std::vector<Color> prefix;
  Verdict verdict = Verdict::kUnknown;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

// All consistent prefixes of length `depth`, in lexicographic order.
std::vector<std::vector<Color>> split_prefixes(const Graph& g, int t, Mode mode,
                                               const SolverOptions& options,
                                               const std::vector<Vertex>& order,
                                               const TriangleLists* triangles, std::size_t depth) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> prefix;
  // Prefix enumeration is tiny (depth <= 3), so plain recursion over apply_prefix.
  auto recurse = [&](auto&& self) -> void {
    if (prefix.size() == depth) {
      out.push_back(prefix);
      return;
    }
    for (Color a = 1; a <= t; ++a) {
      prefix.push_back(a);
      Search probe(g, t, mode, options, order, triangles);
      if (probe.apply_prefix(prefix)) self(self);
      prefix.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

DecideResult decide_parallel(const Graph& g, int t, Mode mode, const SolverOptions& options,
                             const std::vector<Vertex>& order, const TriangleLists* triangles) {
  DecideResult result;
  const unsigned threads = options.threads;
  std::size_t depth = 1;
  auto prefixes = split_prefixes(g, t, mode, options, order, triangles, depth);
  while (prefixes.size() < 4 * threads && depth < 3 && depth < g.vertex_count()) {
    ++depth;
    prefixes = split_prefixes(g, t, mode, options, order, triangles, depth);
  }

  std::vector<Task> tasks(prefixes.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i].prefix = std::move(prefixes[i]);

  SharedBudget budget;
  budget.limit = options.node_budget;
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> first_sat{std::numeric_limits<std::size_t>::max()};

  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next_task.fetch_add(1);
      if (index >= tasks.size()) return;
      Task& task = tasks[index];
      if (index > first_sat.load()) {
        task.verdict = Verdict::kUnknown;
        continue;
      }
      Search search(g, t, mode, options, order, triangles);
      search.attach(&budget);
      if (!search.apply_prefix(task.prefix)) {
        task.verdict = Verdict::kUnsat;
        continue;
      }
      task.verdict = search.run(task.prefix.size(), [&](std::uint64_t) {
        return budget.exhausted() || index > first_sat.load(std::memory_order_relaxed);
      });
      search.flush_nodes();
      task.nodes = search.nodes();
      if (task.verdict == Verdict::kSat) {
        task.witness = search.witness();
        std::size_t current = first_sat.load();
        while (index < current && !first_sat.compare_exchange_weak(current, index)) {
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  result.verdict = Verdict::kUnsat;
  for (const Task& task : tasks) result.stats.nodes += task.nodes;
  for (const Task& task : tasks) {
    if (task.verdict == Verdict::kSat) {
      result.verdict = Verdict::kSat;
      result.witness = task.witness;
      break;
    }
    if (task.verdict == Verdict::kUnknown) result.verdict = Verdict::kUnknown;
  }
  if (result.verdict == Verdict::kUnknown) {
    // A later SAT task still settles the question.
    for (const Task& task : tasks) {
      if (task.verdict == Verdict::kSat) {
        result.verdict = Verdict::kSat;
        result.witness = task.witness;
        break;
      }
    }
  }
  return result;
}

}  // namespace

DecideResult decide(const Graph& g, int t, Mode mode, const SolverOptions& options) {
  if (t < 1) fail(ErrorCode::kInput, "color range must be positive");
  const auto start = Clock::now();
  const std::vector<Vertex> order = branching_order(g);
  std::optional<TriangleLists> triangles;
  if (mode == Mode::kLocal) triangles = triangles_by_vertex(g);
  const TriangleLists* tri = triangles ? &*triangles : nullptr;

  DecideResult result;
  if (options.threads > 1 && g.vertex_count() > 1) {
    if (!options.resume_path.empty()) fail(ErrorCode::kInput, "resuming requires a single thread");
    result = decide_parallel(g, t, mode, options, order, tri);
  } else {
    Search search(g, t, mode, options, order, tri);
    if (!search.apply_prefix(options.resume_path)) {
      fail(ErrorCode::kInput, "resume path is not a node of this search");
    } else {
      result.verdict = search.run(0, [&](std::uint64_t used) { return used >= options.node_budget; });
      search.flush_nodes();
      result.stats.nodes = search.nodes();
      if (result.verdict == Verdict::kSat) result.witness = search.witness();
      if (result.verdict == Verdict::kUnknown) result.checkpoint = search.path();
    }
  }
  if (result.witness) {
    if (auto violation = verify(g, *result.witness, mode)) {
      fail(ErrorCode::kInternal, "solver witness failed verification: " + describe(*violation));
    }
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

SolveResult optimize(const Graph& g, Mode mode, int lower, int upper, const SolverOptions& options,
                     const ResumePoint* resume) {
  if (lower < 1) lower = 1;
  if (resume != nullptr) lower = resume->t;
  if (lower > upper) fail(ErrorCode::kInput, "lower bound exceeds upper bound");
  const auto start = Clock::now();
  SolveResult result;
  result.mode = mode;
  result.proven_lower = resume != nullptr ? std::max(1, resume->proven_lower) : 1;
  result.best_upper = std::numeric_limits<int>::max();

  SolverOptions step_options = options;
  step_options.resume_path.clear();
  bool first = true;
  auto run = [&](int t) {
    if (first && resume != nullptr) step_options.resume_path = resume->path;
    first = false;
    DecideResult d = decide(g, t, mode, step_options);
    step_options.resume_path.clear();
    result.decisions.push_back({t, d.verdict, d.stats.nodes});
    result.stats.nodes += d.stats.nodes;
    if (d.verdict == Verdict::kUnsat) result.proven_lower = std::max(result.proven_lower, t + 1);
    if (d.verdict == Verdict::kSat && t < result.best_upper) {
      result.best_upper = t;
      result.witness = std::move(d.witness);
    }
    if (d.verdict == Verdict::kUnknown) {
      result.checkpoint_t = t;
      result.checkpoint = std::move(d.checkpoint);
    }
    return d.verdict;
  };

  bool unknown = false;
  int t = lower;
  for (; t <= upper; ++t) {
    const Verdict v = run(t);
    if (v == Verdict::kSat) break;
    if (v == Verdict::kUnknown) {
      unknown = true;
      break;
    }
  }
  if (!unknown && t > upper) {
    result.verdict = Verdict::kUnsat;
    result.best_upper = 0;
  } else if (!unknown) {
    // Confirm the step below the first success, walking down if the lower
    // hint turns out to be too high.
    for (int below = t - 1; below >= 1 && result.proven_lower < result.best_upper; --below) {
      const Verdict v = run(below);
      if (v == Verdict::kUnknown) {
        unknown = true;
        break;
      }
      if (v == Verdict::kUnsat) break;
    }
    if (result.best_upper == 1) result.proven_lower = 1;
    if (!unknown && result.proven_lower == result.best_upper) {
      result.verdict = Verdict::kSat;
      result.optimum = result.best_upper;
    }
  }
  if (unknown) {
    result.verdict = Verdict::kUnknown;
    if (result.best_upper == std::numeric_limits<int>::max()) result.best_upper = upper;
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

Bracket kneser_bracket(int n, int k, Mode mode) {
  if (k < 1 || n < 2 * k) fail(ErrorCode::kInput, "KG(n,k) requires n >= 2k >= 2");
  const int chi = n - 2 * k + 2;
  if (mode == Mode::kProper) return {chi, chi};
  return {std::max(chi, 2 * chi - 10), 2 * n - 4 * k + 2};
}

Bracket generic_bracket(const Graph& g) {
  if (g.vertex_count() == 0) return {1, 1};
  std::vector<Color> color(g.vertex_count(), 0);
  int used = 0;
  std::vector<char> taken;
  for (Vertex v : branching_order(g)) {
    taken.assign(static_cast<std::size_t>(used) + 2, 0);
    for (Vertex u : g.neighbors(v)) {
      if (color[u] != 0) taken[color[u]] = 1;
    }
    Color a = 1;
    while (taken[a]) ++a;
    color[v] = a;
    used = std::max(used, a);
  }
  return {1, 2 * used - 1};
}

}  // namespace starfree

#include "starfree/testing/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace starfree::oracle {

std::uint64_t factorial_binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  if (a > 30) throw std::invalid_argument("factorial oracle limited to a <= 30");
  auto factorial = [](int x) {
    unsigned __int128 f = 1;
    for (int i = 2; i <= x; ++i) f *= static_cast<unsigned>(i);
    return f;
  };
  return static_cast<std::uint64_t>(factorial(a) / (factorial(b) * factorial(a - b)));
}

bool proper_by_edges(const Graph& g, const std::vector<int>& colors) {
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

bool star_free_by_paths(const Graph& g, const std::vector<int>& colors) {
  if (!proper_by_edges(g, colors)) return false;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) {
        if (u == w || u == v || w == v || !g.adjacent(u, v) || !g.adjacent(v, w)) continue;
        std::set<int> used{colors[u], colors[v], colors[w]};
        if (used.size() == 2 && *used.rbegin() - *used.begin() == 1) return false;
      }
    }
  }
  return true;
}

bool local_by_subsets(const Graph& g, const std::vector<int>& colors) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  auto gap = [&](Vertex a, Vertex b) { return std::abs(colors[a] - colors[b]); };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const int edges = g.adjacent(a, b) ? 1 : 0;
      if (gap(a, b) < edges) return false;
      for (Vertex c = b + 1; c < n; ++c) {
        const int m = edges + (g.adjacent(a, c) ? 1 : 0) + (g.adjacent(b, c) ? 1 : 0);
        if (std::max({gap(a, b), gap(a, c), gap(b, c)}) < m) return false;
      }
    }
  }
  return true;
}

bool satisfies(const Graph& g, const std::vector<int>& colors, Mode mode) {
  switch (mode) {
    case Mode::kProper: return proper_by_edges(g, colors);
    case Mode::kStarFree: return star_free_by_paths(g, colors);
    case Mode::kLocal: return local_by_subsets(g, colors);
  }
  return false;
}

std::optional<std::vector<int>> brute_force_coloring(const Graph& g, int t, Mode mode) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colors(n, 1);
  for (;;) {
    if (satisfies(g, colors, mode)) return colors;
    // odometer, last vertex fastest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (colors[i] < t) {
        ++colors[i];
        break;
      }
      colors[i] = 1;
      if (i == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

std::optional<std::vector<bool>> brute_force_sat(const Cnf& cnf) {
  if (cnf.variables > 24) throw std::invalid_argument("brute-force SAT limited to 24 variables");
  const std::uint64_t total = std::uint64_t{1} << cnf.variables;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool all = true;
    for (const auto& clause : cnf.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (bits >> (std::abs(lit) - 1)) & 1U;
        if ((lit > 0) == value) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) {
      std::vector<bool> model(static_cast<std::size_t>(cnf.variables) + 1, false);
      for (int v = 1; v <= cnf.variables; ++v) model[v] = (bits >> (v - 1)) & 1U;
      return model;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::vector<int>>> maximal_chains_by_extension(int n) {
  using Vec = std::vector<int>;
  std::vector<std::vector<Vec>> out;
  std::vector<Vec> chain;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(chain.size()) == n) {
      out.push_back(chain);
      return;
    }
    Vec base = chain.empty() ? Vec(static_cast<std::size_t>(n), 0) : chain.back();
    for (int i = 0; i < n; ++i) {
      if (base[i] != 0) continue;
      for (int s : {1, -1}) {
        Vec next = base;
        next[i] = s;
        chain.push_back(next);
        extend();
        chain.pop_back();
      }
    }
  };
  extend();
  return out;
}

std::vector<std::vector<int>> colex_sorted_subsets(int n, int k) {
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(current.size()) == k) {
      all.push_back(current);
      return;
    }
    for (int e = from; e <= n; ++e) {
      current.push_back(e);
      pick(e + 1);
      current.pop_back();
    }
  };
  pick(1);
  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return all;
}

}  // namespace starfree::oracle

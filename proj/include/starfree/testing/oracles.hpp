#pragma once

// Brute-force reference implementations. They follow the definitions
// literally and share no code paths with the library routines they check.

#include <cstdint>
#include <optional>
#include <vector>

#include "starfree/cnf.hpp"
#include "starfree/coloring.hpp"
#include "starfree/graph.hpp"

namespace starfree::oracle {

/// a! / (b! (a-b)!) in 128-bit arithmetic; a <= 30.
std::uint64_t factorial_binomial(int a, int b);

/// Every pair/triple S has u, v in S with |c(u)-c(v)| >= number of edges of G[S].
bool local_by_subsets(const Graph& g, const std::vector<int>& colors);
/// Every path u-v-w (u != w) avoids the color set {a, a+1}; includes properness.
bool star_free_by_paths(const Graph& g, const std::vector<int>& colors);
bool proper_by_edges(const Graph& g, const std::vector<int>& colors);
bool satisfies(const Graph& g, const std::vector<int>& colors, Mode mode);

/// Enumerates all t^V assignments; returns the first satisfying one in
/// lexicographic order of (c(0), c(1), ...).
std::optional<std::vector<int>> brute_force_coloring(const Graph& g, int t, Mode mode);

/// Enumerates all 2^variables assignments (variables <= 24).
std::optional<std::vector<bool>> brute_force_sat(const Cnf& cnf);

/// Maximal chains of nonzero sign vectors built by repeatedly extending with
/// comparable vectors of support one larger, as explicit {-1,0,1} tuples.
std::vector<std::vector<std::vector<int>>> maximal_chains_by_extension(int n);

/// All k-subsets of [n] as ascending element lists, sorted colexicographically
/// by comparing reversed lists.
std::vector<std::vector<int>> colex_sorted_subsets(int n, int k);

}  // namespace starfree::oracle

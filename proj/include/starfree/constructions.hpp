#pragma once

#include <optional>
#include <vector>

#include "starfree/coloring.hpp"
#include "starfree/kneser_graph.hpp"

namespace starfree {

/// Colors vertex A of KG(n,k) by 2i-1 where i = min(A) when i <= n-2k+1, and
/// by 2n-4k+2 when A avoids [n-2k+1]. Range 2n-4k+2; the result is local.
Coloring ladder_coloring(int n, int k);

/// Maps color i to 2i-1 (range 2t-1). The input must be proper; otherwise
/// throws ErrorCode::kInput naming the violation. The output is local.
Coloring double_coloring(const Graph& g, const Coloring& proper);

/// Star-free coloring of KG(n,k) from a star-free coloring `c` of KG(n-1,k)
/// with range t: vertices avoiding n keep their color, vertices containing n
/// get t+2, and t+1 stays unused. The output is re-verified before returning.
Coloring extend_coloring(const Coloring& c, int n_minus_1, int k);

struct CascadeReport {
  bool ok = false;
  /// The common element of color class j.
  int element = 0;
  /// First vertex colored j-1 or j+1 that misses the element, when !ok.
  std::optional<Vertex> offending_vertex;
  std::optional<Color> offending_color;
};

/// Confirms that every vertex colored j-1 (j >= 2) or j+1 (j+1 <= range)
/// contains the single common element of class j. Throws
/// ErrorCode::kPrecondition when class j is empty or its intersection is not a
/// singleton.
CascadeReport check_cascade(const KneserGraph& g, const Coloring& c, Color j);

struct ReduceResult {
  Coloring coloring;  ///< star-free coloring of KG(n-1,k), range t-2
  int common_element = 0;
  /// permutation[e-1] is the image of element e under the swap common <-> n.
  std::vector<int> permutation;
  /// vertex_map[v] is the KG(n,k) vertex that became vertex v of KG(n-1,k).
  std::vector<Vertex> vertex_map;
};

/// Collapses classes j-1, j, j+1 of a star-free coloring of KG(n,k) whose class
/// j reaches the Hilton-Milner bound: colors <= j-2 stay, colors >= j+2 drop by
/// two. Throws kPrecondition for a small class and kCascade when a vertex of
/// color j-1, j or j+1 misses the common element.
ReduceResult reduce_coloring(const KneserGraph& g, const Coloring& c, Color j);

/// Smallest color whose class reaches hm_bound(n,k), if any.
std::optional<Color> smallest_qualifying_class(const KneserGraph& g, const Coloring& c);

/// Adds `offset` to every color (range grows by the same amount).
Coloring shift_colors(const Coloring& c, int offset);

}  // namespace starfree

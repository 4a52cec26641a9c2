#pragma once

#include <cstdint>
#include <vector>

#include "starfree/combinatorics.hpp"
#include "starfree/graph.hpp"

namespace starfree {

struct KneserOptions {
  /// Hard cap on C(n, k).
  std::uint64_t max_vertices = 1'000'000;
  /// Query-only graphs answer adjacency by testing disjointness on demand.
  bool precompute_adjacency = true;
};

/// KG(n, k): vertices are the k-subsets of [n] indexed by colex rank, two
/// vertices adjacent iff the subsets are disjoint.
class KneserGraph {
 public:
  /// Requires n >= 2k >= 2. Throws ErrorCode::kResource past the vertex cap.
  static KneserGraph build(int n, int k, const KneserOptions& options = {});

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return subsets_.size(); }
  /// Every vertex has degree C(n-k, k).
  std::uint64_t degree() const;

  const Subset& subset(Vertex v) const { return subsets_.at(v); }
  /// Vertex index of a k-subset of [n] (its colex rank).
  Vertex index_of(const Subset& s) const;

  bool adjacent(Vertex u, Vertex v) const {
    return (subsets_[u].mask() & subsets_[v].mask()) == 0;
  }
  std::vector<Vertex> neighbors(Vertex v) const;

  bool has_adjacency() const noexcept { return has_adjacency_; }
  /// Precomputed adjacency; throws for query-only graphs.
  const Graph& graph() const;

 private:
  int n_ = 0;
  int k_ = 0;
  bool has_adjacency_ = false;
  std::vector<Subset> subsets_;
  Graph graph_;
};

inline KneserGraph build_kneser(int n, int k, const KneserOptions& options = {}) {
  return KneserGraph::build(n, k, options);
}

struct InducedSubgraph {
  Graph graph;
  /// vertex_map[i] is the KG(n, k) index of vertex i of `graph`.
  std::vector<Vertex> vertex_map;
};

/// Subgraph induced by all k-subsets of `ground`, in increasing colex order.
/// Returns an empty graph when |ground| < k.
InducedSubgraph induced_subgraph(const KneserGraph& g, const Subset& ground);

}  // namespace starfree

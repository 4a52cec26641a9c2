#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starfree {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph in compressed adjacency form. Neighbor lists are
/// sorted ascending; the graph is immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Rejects loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
  /// Neighbor lists must be symmetric; they are sorted here.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Small fixtures.
Graph path_graph(std::size_t vertex_count);
Graph cycle_graph(std::size_t vertex_count);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t vertex_count);

/// DIMACS edge format: "p edge N M" then "e u v" (1-based, u < v, sorted).
std::string export_dimacs(const Graph& g);
Graph parse_dimacs(std::string_view text);

}  // namespace starfree

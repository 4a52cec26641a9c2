#include "starfree/kneser_graph.hpp"

#include <string>

#include "starfree/errors.hpp"

namespace starfree {

KneserGraph KneserGraph::build(int n, int k, const KneserOptions& options) {
  if (k < 1 || n < 2 * k) {
    fail(ErrorCode::kInput, "KG(n,k) requires n >= 2k >= 2, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  if (n > kMaxGroundSize) fail(ErrorCode::kInput, "n exceeds 64");
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (count > options.max_vertices) {
    fail(ErrorCode::kResource, "KG(" + std::to_string(n) + "," + std::to_string(k) + ") has C(n,k)=" +
                                   std::to_string(count) + " vertices, above the limit of " +
                                   std::to_string(options.max_vertices));
  }

  KneserGraph g;
  g.n_ = n;
  g.k_ = k;
  g.subsets_.reserve(count);
  // Colex enumeration of k-submasks of [n] visits vertices in rank order.
  for_each_k_submask(Subset::full(n).mask(), k, [&](std::uint64_t mask) {
    g.subsets_.push_back(Subset::from_mask(n, mask));
  });

  if (options.precompute_adjacency) {
    std::vector<std::vector<Vertex>> adjacency(count);
    for (Vertex v = 0; v < count; ++v) adjacency[v] = g.neighbors(v);
    g.graph_ = Graph::from_adjacency(std::move(adjacency));
    g.has_adjacency_ = true;
  }
  return g;
}

std::uint64_t KneserGraph::degree() const {
  return binomial(static_cast<std::uint64_t>(n_ - k_), static_cast<std::uint64_t>(k_));
}

Vertex KneserGraph::index_of(const Subset& s) const {
  if (s.ground_size() != n_ || s.size() != k_) {
    fail(ErrorCode::kInput, "'" + to_text(s) + "' is not a " + std::to_string(k_) +
                                "-subset of [" + std::to_string(n_) + "]");
  }
  return static_cast<Vertex>(colex_rank(s));
}

std::vector<Vertex> KneserGraph::neighbors(Vertex v) const {
  if (has_adjacency_) {
    auto list = graph_.neighbors(v);
    return {list.begin(), list.end()};
  }
  std::vector<Vertex> out;
  const std::uint64_t complement = Subset::full(n_).mask() & ~subsets_.at(v).mask();
  for_each_k_submask(complement, k_, [&](std::uint64_t mask) {
    out.push_back(static_cast<Vertex>(colex_rank(Subset::from_mask(n_, mask))));
  });
  // colex order of submasks of a fixed universe agrees with global colex order
  return out;
}

const Graph& KneserGraph::graph() const {
  if (!has_adjacency_) fail(ErrorCode::kInput, "Kneser graph was built query-only");
  return graph_;
}

InducedSubgraph induced_subgraph(const KneserGraph& g, const Subset& ground) {
  if (ground.ground_size() != g.n()) fail(ErrorCode::kInput, "ground set not a subset of [n]");
  InducedSubgraph out;
  if (ground.size() < g.k()) {
    out.graph = Graph(0);
    return out;
  }
  for_each_k_submask(ground.mask(), g.k(), [&](std::uint64_t mask) {
    out.vertex_map.push_back(g.index_of(Subset::from_mask(g.n(), mask)));
  });
  std::vector<Edge> edges;
  for (Vertex a = 0; a < out.vertex_map.size(); ++a) {
    for (Vertex b = a + 1; b < out.vertex_map.size(); ++b) {
      if (g.adjacent(out.vertex_map[a], out.vertex_map[b])) edges.emplace_back(a, b);
    }
  }
  out.graph = Graph::from_edges(out.vertex_map.size(), edges);
  return out;
}

}  // namespace starfree

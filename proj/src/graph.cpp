#include "starfree/graph.hpp"

#include <algorithm>
#include <sstream>

#include "starfree/errors.hpp"

namespace starfree {

Graph::Graph(std::size_t vertex_count) : offsets_(vertex_count + 1, 0) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      fail(ErrorCode::kInput, "edge endpoint out of range");
    }
    if (u == v) fail(ErrorCode::kInput, "loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      fail(ErrorCode::kInput, "duplicate edge");
    }
  }
  return from_adjacency(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g(adjacency.size());
  std::size_t total = 0;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    std::sort(adjacency[v].begin(), adjacency[v].end());
    total += adjacency[v].size();
    g.offsets_[v + 1] = total;
  }
  if (total % 2 != 0) fail(ErrorCode::kInput, "asymmetric adjacency");
  g.targets_.reserve(total);
  for (auto& list : adjacency) {
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    std::vector<Vertex>().swap(list);
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph path_graph(std::size_t vertex_count) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < vertex_count; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph::from_edges(vertex_count, edges);
}

Graph cycle_graph(std::size_t vertex_count) {
  if (vertex_count < 3) fail(ErrorCode::kInput, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % vertex_count));
  }
  return Graph::from_edges(vertex_count, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t vertex_count) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < vertex_count; ++u) {
    for (std::size_t v = u + 1; v < vertex_count; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(vertex_count, edges);
}

std::string export_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t vertex_count = 0;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      std::string format;
      if (have_header || !(fields >> format >> vertex_count >> declared_edges) ||
          (format != "edge" && format != "col")) {
        fail(ErrorCode::kInput, "bad DIMACS header at line " + std::to_string(line_no));
      }
      have_header = true;
    } else if (tag == "e") {
      long long u = 0;
      long long v = 0;
      if (!have_header || !(fields >> u >> v) || u < 1 || v < 1 ||
          static_cast<std::size_t>(u) > vertex_count ||
          static_cast<std::size_t>(v) > vertex_count) {
        fail(ErrorCode::kInput, "bad DIMACS edge at line " + std::to_string(line_no));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail(ErrorCode::kInput, "unexpected DIMACS line " + std::to_string(line_no));
    }
  }
  if (!have_header) fail(ErrorCode::kInput, "missing DIMACS header");
  if (edges.size() != declared_edges) {
    fail(ErrorCode::kInput, "DIMACS header declares " + std::to_string(declared_edges) +
                                " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(vertex_count, edges);
}

}  // namespace starfree

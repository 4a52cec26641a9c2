#include "starfree/coloring.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "starfree/errors.hpp"

namespace starfree {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kProper: return "proper";
    case Mode::kStarFree: return "star-free";
    case Mode::kLocal: return "local";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "proper") return Mode::kProper;
  if (text == "star-free") return Mode::kStarFree;
  if (text == "local") return Mode::kLocal;
  fail(ErrorCode::kInput, "unknown mode '" + std::string(text) + "'");
}

Coloring::Coloring(int range, std::vector<Color> colors) : range_(range), colors_(std::move(colors)) {
  if (range_ < 1) fail(ErrorCode::kInput, "color range must be positive");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1 || colors_[v] > range_) {
      fail(ErrorCode::kInput, "vertex " + std::to_string(v) + " has color " +
                                  std::to_string(colors_[v]) + " outside 1.." +
                                  std::to_string(range_));
    }
  }
}

int coloring_value(const Coloring& c) {
  auto colors = c.colors();
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEdge: return "edge";
    case ViolationKind::kStar: return "star";
    case ViolationKind::kTriangle: return "triangle";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  out << violation_kind_name(v.kind) << " violation: vertices";
  for (Vertex x : v.vertices) out << ' ' << x;
  out << " colored";
  for (Color x : v.colors) out << ' ' << x;
  return out.str();
}

namespace {

void check_sizes(const Graph& g, const Coloring& c) {
  if (g.vertex_count() != c.size()) {
    fail(ErrorCode::kInput, "coloring covers " + std::to_string(c.size()) +
                                " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
}

std::optional<Violation> find_edge_violation(const Graph& g, const Coloring& c) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && c[u] == c[v]) return Violation{ViolationKind::kEdge, {u, v}, {c[u], c[v]}};
    }
  }
  return std::nullopt;
}

// Assumes properness. A star is a center v with two neighbors sharing a color
// adjacent to c(v); first_with[a] remembers the earliest neighbor colored a.
std::optional<Violation> find_star_violation(const Graph& g, const Coloring& c) {
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> first_with(static_cast<std::size_t>(c.range()) + 2, kNone);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Color center = c[v];
    std::optional<Violation> found;
    for (Vertex w : g.neighbors(v)) {
      const Color a = c[w];
      if (a != center - 1 && a != center + 1) continue;
      if (first_with[a] == kNone) {
        first_with[a] = w;
      } else {
        found = Violation{ViolationKind::kStar, {first_with[a], v, w}, {a, center, a}};
        break;
      }
    }
    if (center - 1 >= 0) first_with[center - 1] = kNone;
    first_with[center + 1] = kNone;
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Violation> find_triangle_violation(const Graph& g, const Coloring& c) {
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
          std::array<Color, 3> colors{c[u], c[v], c[w]};
          std::sort(colors.begin(), colors.end());
          if (colors[1] == colors[0] + 1 && colors[2] == colors[1] + 1) {
            return Violation{ViolationKind::kTriangle, {u, v, w}, {c[u], c[v], c[w]}};
          }
          ++i;
          ++j;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> verify_proper(const Graph& g, const Coloring& c) {
  check_sizes(g, c);
  return find_edge_violation(g, c);
}

std::optional<Violation> verify_star_free(const Graph& g, const Coloring& c) {
  check_sizes(g, c);
  if (auto v = find_edge_violation(g, c)) return v;
  return find_star_violation(g, c);
}

std::optional<Violation> verify_local(const Graph& g, const Coloring& c) {
  check_sizes(g, c);
  if (auto v = find_edge_violation(g, c)) return v;
  if (auto v = find_star_violation(g, c)) return v;
  return find_triangle_violation(g, c);
}

std::optional<Violation> verify(const Graph& g, const Coloring& c, Mode mode) {
  switch (mode) {
    case Mode::kProper: return verify_proper(g, c);
    case Mode::kStarFree: return verify_star_free(g, c);
    case Mode::kLocal: return verify_local(g, c);
  }
  return std::nullopt;
}

}  // namespace starfree

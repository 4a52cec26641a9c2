#include "starfree/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "starfree/errors.hpp"
#include "starfree/hilton_milner.hpp"

namespace starfree {

Coloring ladder_coloring(int n, int k) {
  if (k < 1 || n < 2 * k) fail(ErrorCode::kInput, "ladder coloring needs n >= 2k >= 2");
  const int odd_classes = n - 2 * k + 1;
  const int range = 2 * n - 4 * k + 2;
  std::vector<Color> colors;
  for_each_k_submask(Subset::full(n).mask(), k, [&](std::uint64_t mask) {
    const int smallest = std::countr_zero(mask) + 1;
    colors.push_back(smallest <= odd_classes ? 2 * smallest - 1 : range);
  });
  return Coloring(range, std::move(colors));
}

Coloring double_coloring(const Graph& g, const Coloring& proper) {
  if (auto violation = verify_proper(g, proper)) {
    fail(ErrorCode::kInput, "input coloring is not proper: " + describe(*violation));
  }
  std::vector<Color> colors;
  colors.reserve(proper.size());
  for (Color c : proper.colors()) colors.push_back(2 * c - 1);
  return Coloring(2 * proper.range() - 1, std::move(colors));
}

Coloring extend_coloring(const Coloring& c, int n_minus_1, int k) {
  const KneserGraph small = KneserGraph::build(n_minus_1, k);
  if (auto violation = verify_star_free(small.graph(), c)) {
    fail(ErrorCode::kInput, "input coloring is not star-free: " + describe(*violation));
  }
  const KneserGraph large = KneserGraph::build(n_minus_1 + 1, k);
  const int range = c.range() + 2;
  std::vector<Color> colors(large.vertex_count());
  // Colex ranks of subsets avoiding n coincide in KG(n-1,k) and KG(n,k), and
  // they occupy the first C(n-1,k) ranks.
  for (Vertex v = 0; v < large.vertex_count(); ++v) {
    colors[v] = v < small.vertex_count() ? c[v] : range;
  }
  Coloring out(range, std::move(colors));
  if (auto violation = verify_star_free(large.graph(), out)) {
    fail(ErrorCode::kInternal, "extended coloring failed verification: " + describe(*violation));
  }
  return out;
}

namespace {

std::vector<Subset> color_class(const KneserGraph& g, const Coloring& c, Color j) {
  std::vector<Subset> members;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c[v] == j) members.push_back(g.subset(v));
  }
  return members;
}

void check_coloring_size(const KneserGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    fail(ErrorCode::kInput, "coloring does not match KG(" + std::to_string(g.n()) + "," +
                                std::to_string(g.k()) + ")");
  }
}

}  // namespace

CascadeReport check_cascade(const KneserGraph& g, const Coloring& c, Color j) {
  check_coloring_size(g, c);
  if (j < 1 || j > c.range()) fail(ErrorCode::kInput, "class index outside the color range");
  std::uint64_t common = Subset::full(g.n()).mask();
  bool any = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c[v] == j) {
      common &= g.subset(v).mask();
      any = true;
    }
  }
  if (!any) fail(ErrorCode::kPrecondition, "color class " + std::to_string(j) + " is empty");
  if (std::popcount(common) != 1) {
    fail(ErrorCode::kPrecondition, "color class " + std::to_string(j) +
                                       " does not have a single common element");
  }
  CascadeReport report;
  report.element = std::countr_zero(common) + 1;
  report.ok = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Color color = c[v];
    if ((color == j - 1 || color == j + 1) && !g.subset(v).contains(report.element)) {
      report.ok = false;
      report.offending_vertex = v;
      report.offending_color = color;
      break;
    }
  }
  return report;
}

ReduceResult reduce_coloring(const KneserGraph& g, const Coloring& c, Color j) {
  check_coloring_size(g, c);
  const int n = g.n();
  const int k = g.k();
  if (n - 1 < 2 * k) fail(ErrorCode::kPrecondition, "KG(n-1,k) needs n-1 >= 2k");
  if (auto violation = verify_star_free(g.graph(), c)) {
    fail(ErrorCode::kInput, "input coloring is not star-free: " + describe(*violation));
  }
  if (j < 1 || j > c.range()) fail(ErrorCode::kInput, "class index outside the color range");

  IntersectingFamily family{n, k, color_class(g, c, j)};
  const int element = common_element(family);  // enforces the size bound
  const CascadeReport cascade = check_cascade(g, c, j);
  if (!cascade.ok) {
    fail(ErrorCode::kCascade, "vertex '" + to_text(g.subset(*cascade.offending_vertex)) +
                                  "' colored " + std::to_string(*cascade.offending_color) +
                                  " misses the common element " + std::to_string(element));
  }

  ReduceResult result;
  result.common_element = element;
  result.permutation.resize(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) result.permutation[e - 1] = e;
  std::swap(result.permutation[element - 1], result.permutation[n - 1]);

  const KneserGraph small = KneserGraph::build(n - 1, k);
  std::vector<Color> colors(small.vertex_count());
  result.vertex_map.resize(small.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Subset& a = g.subset(v);
    if (a.contains(element)) continue;
    std::vector<int> image;
    for (int e : a.elements()) image.push_back(result.permutation[e - 1]);
    std::sort(image.begin(), image.end());
    const Vertex target = small.index_of(Subset::from_elements(n - 1, image));
    const Color color = c[v];
    if (color >= j - 1 && color <= j + 1) {
      fail(ErrorCode::kCascade, "vertex '" + to_text(a) + "' colored " + std::to_string(color) +
                                    " misses the common element " + std::to_string(element));
    }
    colors[target] = color <= j - 2 ? color : color - 2;
    result.vertex_map[target] = v;
  }
  result.coloring = Coloring(c.range() - 2, std::move(colors));
  if (auto violation = verify_star_free(small.graph(), result.coloring)) {
    fail(ErrorCode::kInternal, "reduced coloring failed verification: " + describe(*violation));
  }
  return result;
}

std::optional<Color> smallest_qualifying_class(const KneserGraph& g, const Coloring& c) {
  check_coloring_size(g, c);
  const std::uint64_t bound = hm_bound(g.n(), g.k());
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(c.range()) + 1, 0);
  for (Color color : c.colors()) ++sizes[color];
  for (Color j = 1; j <= c.range(); ++j) {
    if (sizes[j] >= bound) return j;
  }
  return std::nullopt;
}

Coloring shift_colors(const Coloring& c, int offset) {
  std::vector<Color> colors(c.colors().begin(), c.colors().end());
  for (Color& color : colors) color += offset;
  return Coloring(c.range() + offset, std::move(colors));
}

}  // namespace starfree

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

using Color = int;

/// Which family of colorings a check or search refers to. Local colorings are
/// star-free, and star-free colorings are proper.
enum class Mode { kProper, kStarFree, kLocal };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

/// A total map vertex -> {1..range}. Colors need not cover the whole range.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int range, std::vector<Color> colors);

  int range() const noexcept { return range_; }
  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int range_ = 1;
  std::vector<Color> colors_;
};

/// Largest color actually used (0 for a coloring of the empty graph).
int coloring_value(const Coloring& c);

enum class ViolationKind { kEdge, kStar, kTriangle };

std::string_view violation_kind_name(ViolationKind kind);

/// Certificate of a failed check. For kStar the middle vertex is the center
/// of the path; for kEdge and kTriangle vertices are ascending.
struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

// All checks scan vertices, then neighbors, in ascending order and report the
// first violation met. A vertex-count mismatch throws ErrorCode::kInput.
std::optional<Violation> verify_proper(const Graph& g, const Coloring& c);
std::optional<Violation> verify_star_free(const Graph& g, const Coloring& c);
std::optional<Violation> verify_local(const Graph& g, const Coloring& c);
std::optional<Violation> verify(const Graph& g, const Coloring& c, Mode mode);

}  // namespace starfree

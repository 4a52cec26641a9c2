#pragma once

#include <string>
#include <string_view>

#include "starfree/coloring.hpp"

namespace starfree {

/// Parsed coloring file. Kneser files ("KNESER n k t") list "<subset> <color>";
/// generic files ("GRAPH N t") list "<vertex-index> <color>" with 0-based
/// indices. Lines starting with '#' are comments.
struct ColoringFile {
  bool kneser = false;
  int n = 0;
  int k = 0;
  Coloring coloring;
};

ColoringFile parse_coloring_file(std::string_view text);

/// Vertices are written in colex order.
std::string format_kneser_coloring(int n, int k, const Coloring& c, std::string_view comment = {});
std::string format_graph_coloring(const Coloring& c, std::string_view comment = {});
std::string format_coloring_file(const ColoringFile& file, std::string_view comment = {});

}  // namespace starfree

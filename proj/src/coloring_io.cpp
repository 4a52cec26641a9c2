#include "starfree/coloring_io.hpp"

#include <sstream>
#include <vector>

#include "starfree/combinatorics.hpp"
#include "starfree/errors.hpp"

namespace starfree {
namespace {

constexpr Color kUnset = 0;
constexpr std::uint64_t kMaxFileVertices = 10'000'000;

void write_comment(std::ostringstream& out, std::string_view comment) {
  std::istringstream lines{std::string(comment)};
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

}  // namespace

ColoringFile parse_coloring_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  ColoringFile file;
  int range = 0;
  bool have_header = false;
  std::vector<Color> colors;

  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kInput, "coloring file line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      fields >> tag;
      std::uint64_t count = 0;
      if (tag == "KNESER") {
        if (!(fields >> file.n >> file.k >> range)) bad("expected 'KNESER <n> <k> <t>'");
        if (file.k < 1 || file.n < 2 * file.k || file.n > kMaxGroundSize) bad("need n >= 2k >= 2");
        file.kneser = true;
        count = binomial(static_cast<std::uint64_t>(file.n), static_cast<std::uint64_t>(file.k));
      } else if (tag == "GRAPH") {
        long long vertices = 0;
        if (!(fields >> vertices >> range) || vertices < 0) bad("expected 'GRAPH <N> <t>'");
        count = static_cast<std::uint64_t>(vertices);
      } else {
        bad("expected KNESER or GRAPH header");
      }
      if (range < 1) bad("color range must be positive");
      if (count > kMaxFileVertices) bad("too many vertices");
      colors.assign(count, kUnset);
      have_header = true;
      continue;
    }
    std::string vertex_text;
    long long color = 0;
    std::string extra;
    if (!(fields >> vertex_text >> color) || (fields >> extra)) bad("expected '<vertex> <color>'");
    std::uint64_t index = 0;
    if (file.kneser) {
      Subset s = parse_subset(file.n, vertex_text);
      if (s.size() != file.k) bad("subset '" + vertex_text + "' does not have k elements");
      index = colex_rank(s);
    } else {
      std::size_t consumed = 0;
      long long value = -1;
      try {
        value = std::stoll(vertex_text, &consumed);
      } catch (const std::exception&) {
        bad("bad vertex index '" + vertex_text + "'");
      }
      if (consumed != vertex_text.size() || value < 0 ||
          static_cast<std::uint64_t>(value) >= colors.size()) {
        bad("vertex index '" + vertex_text + "' out of range");
      }
      index = static_cast<std::uint64_t>(value);
    }
    if (color < 1 || color > range) bad("color outside 1.." + std::to_string(range));
    if (colors[index] != kUnset) bad("vertex '" + vertex_text + "' listed twice");
    colors[index] = static_cast<Color>(color);
  }
  if (!have_header) fail(ErrorCode::kInput, "coloring file has no header");
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == kUnset) {
      const std::string name = file.kneser
                                   ? to_text(colex_unrank(file.n, file.k, v))
                                   : std::to_string(v);
      fail(ErrorCode::kInput, "coloring file misses vertex " + name);
    }
  }
  file.coloring = Coloring(range, std::move(colors));
  return file;
}

std::string format_kneser_coloring(int n, int k, const Coloring& c, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "KNESER " << n << ' ' << k << ' ' << c.range() << '\n';
  for (Vertex v = 0; v < c.size(); ++v) {
    out << to_text(colex_unrank(n, k, v)) << ' ' << c[v] << '\n';
  }
  return out.str();
}

std::string format_graph_coloring(const Coloring& c, std::string_view comment) {
  std::ostringstream out;
  write_comment(out, comment);
  out << "GRAPH " << c.size() << ' ' << c.range() << '\n';
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
  return out.str();
}

std::string format_coloring_file(const ColoringFile& file, std::string_view comment) {
  return file.kneser ? format_kneser_coloring(file.n, file.k, file.coloring, comment)
                     : format_graph_coloring(file.coloring, comment);
}

}  // namespace starfree

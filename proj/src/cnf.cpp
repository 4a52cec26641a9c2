#include "starfree/cnf.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "starfree/errors.hpp"

namespace starfree {

Cnf build_cnf(const Graph& g, int t, Mode mode) {
  if (t < 1) fail(ErrorCode::kInput, "color range must be positive");
  Cnf cnf;
  cnf.variables = static_cast<int>(g.vertex_count()) * t;
  auto x = [t](Vertex v, Color a) { return color_variable(v, a, t); };

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> clause;
    for (Color a = 1; a <= t; ++a) clause.push_back(x(v, a));
    cnf.clauses.push_back(std::move(clause));
  }
  const std::vector<Edge> edges = g.edges();
  for (auto [u, v] : edges) {
    for (Color a = 1; a <= t; ++a) cnf.clauses.push_back({-x(u, a), -x(v, a)});
  }
  if (mode == Mode::kProper) return cnf;

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        for (Color a = 1; a <= t; ++a) {
          for (Color b : {a - 1, a + 1}) {
            if (b < 1 || b > t) continue;
            cnf.clauses.push_back({-x(nv[i], a), -x(nv[j], a), -x(v, b)});
          }
        }
      }
    }
  }
  if (mode == Mode::kStarFree) return cnf;

  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        for (Color a = 1; a + 2 <= t; ++a) {
          std::array<Color, 3> p{a, a + 1, a + 2};
          do {
            cnf.clauses.push_back({-x(u, p[0]), -x(v, p[1]), -x(w, p[2])});
          } while (std::next_permutation(p.begin(), p.end()));
        }
      }
    }
  }
  return cnf;
}

std::string format_dimacs_cnf(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string export_cnf(const Graph& g, int t, Mode mode) {
  return format_dimacs_cnf(build_cnf(g, t, mode));
}

Cnf parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  std::size_t declared = 0;
  bool have_header = false;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (line[0] == 'p') {
      std::string p;
      std::string format;
      if (!(fields >> p >> format >> cnf.variables >> declared) || format != "cnf") {
        fail(ErrorCode::kInput, "bad CNF header");
      }
      have_header = true;
      continue;
    }
    if (!have_header) fail(ErrorCode::kInput, "CNF clause before header");
    int lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        if (std::abs(lit) > cnf.variables) fail(ErrorCode::kInput, "CNF literal out of range");
        clause.push_back(lit);
      }
    }
  }
  if (!clause.empty()) fail(ErrorCode::kInput, "unterminated CNF clause");
  if (cnf.clauses.size() != declared) fail(ErrorCode::kInput, "CNF clause count mismatch");
  return cnf;
}

Coloring decode_model(const std::vector<bool>& model, std::size_t vertex_count, int t) {
  if (model.size() < vertex_count * static_cast<std::size_t>(t) + 1) {
    fail(ErrorCode::kInput, "model shorter than the variable count");
  }
  std::vector<Color> colors(vertex_count, 0);
  for (Vertex v = 0; v < vertex_count; ++v) {
    for (Color a = 1; a <= t; ++a) {
      if (model[static_cast<std::size_t>(color_variable(v, a, t))]) {
        colors[v] = a;
        break;
      }
    }
    if (colors[v] == 0) fail(ErrorCode::kInput, "model leaves vertex " + std::to_string(v) + " uncolored");
  }
  return Coloring(t, std::move(colors));
}

}  // namespace starfree

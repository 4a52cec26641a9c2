#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "starfree/coloring.hpp"
#include "starfree/graph.hpp"

namespace starfree {

/// CNF in DIMACS conventions: literals are +-(variable), variables 1-based.
struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

/// Variable for "vertex v has color a": v*t + a, with v 0-based and a in 1..t.
inline int color_variable(Vertex v, Color a, int t) { return static_cast<int>(v) * t + a; }

/// Encoding of the coloring constraints with range t. Clause groups, in order:
/// one at-least-one clause per vertex; (-x_{u,a} | -x_{v,a}) per edge and
/// color; for star-free and local, (-x_{u,a} | -x_{w,a} | -x_{v,b}) per center
/// v, neighbor pair u < w and |a-b| = 1; for local, one clause per triangle
/// and assignment of {a,a+1,a+2} to its corners. At-most-one clauses are
/// omitted: every other clause is purely negative.
Cnf build_cnf(const Graph& g, int t, Mode mode);

std::string format_dimacs_cnf(const Cnf& cnf);
std::string export_cnf(const Graph& g, int t, Mode mode);
Cnf parse_dimacs_cnf(std::string_view text);

/// Projects a model (model[var] for var in 1..variables; index 0 unused) to a
/// coloring by taking each vertex's smallest true color.
Coloring decode_model(const std::vector<bool>& model, std::size_t vertex_count, int t);

}  // namespace starfree

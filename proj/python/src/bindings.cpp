#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "starfree/bounds.hpp"
#include "starfree/cnf.hpp"
#include "starfree/coloring.hpp"
#include "starfree/coloring_io.hpp"
#include "starfree/constructions.hpp"
#include "starfree/errors.hpp"
#include "starfree/fan.hpp"
#include "starfree/hilton_milner.hpp"
#include "starfree/kneser_graph.hpp"
#include "starfree/report_json.hpp"
#include "starfree/solver.hpp"

namespace py = pybind11;
using namespace starfree;

namespace {

// Reports cross the boundary as JSON and come back as plain dicts.
template <typename T>
py::object to_python(const T& value) {
  return py::module_::import("json").attr("loads")(nlohmann::json(value).dump());
}

std::vector<int> elements_of(const Subset& s) { return s.elements(); }

py::object violation_dict(const std::optional<Violation>& v) {
  if (!v) return py::none();
  py::dict d;
  d["kind"] = std::string(violation_kind_name(v->kind));
  d["vertices"] = v->vertices;
  d["colors"] = v->colors;
  d["text"] = describe(*v);
  return d;
}

}  // namespace

PYBIND11_MODULE(_starfree, m) {
  m.doc() = "Star-free and local colorings of Kneser graphs";

  static py::exception<Error> error_type(m, "StarfreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<Mode>(m, "Mode")
      .value("PROPER", Mode::kProper)
      .value("STAR_FREE", Mode::kStarFree)
      .value("LOCAL", Mode::kLocal);

  m.def("parse_mode", [](const std::string& s) { return parse_mode(s); });
  m.def("binomial", &binomial, py::arg("a"), py::arg("b"));
  m.def(
      "colex_rank",
      [](int n, const std::vector<int>& elements) { return colex_rank(Subset::from_elements(n, elements)); },
      py::arg("n"), py::arg("elements"));
  m.def(
      "colex_unrank", [](int n, int k, std::uint64_t r) { return elements_of(colex_unrank(n, k, r)); },
      py::arg("n"), py::arg("k"), py::arg("rank"));

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t vertices, const std::vector<Edge>& edges) {
             return Graph::from_edges(vertices, edges);
           }),
           py::arg("vertex_count"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("to_dimacs", &export_dimacs)
      .def_static("from_dimacs", &parse_dimacs)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  py::class_<KneserGraph>(m, "KneserGraph")
      .def(py::init([](int n, int k, std::uint64_t max_vertices) {
             KneserOptions options;
             options.max_vertices = max_vertices;
             return KneserGraph::build(n, k, options);
           }),
           py::arg("n"), py::arg("k"), py::arg("max_vertices") = KneserOptions{}.max_vertices)
      .def_property_readonly("n", &KneserGraph::n)
      .def_property_readonly("k", &KneserGraph::k)
      .def_property_readonly("vertex_count", &KneserGraph::vertex_count)
      .def_property_readonly("degree", &KneserGraph::degree)
      .def_property_readonly("graph", &KneserGraph::graph, py::return_value_policy::reference_internal)
      .def("subset", [](const KneserGraph& g, Vertex v) { return elements_of(g.subset(v)); })
      .def("index_of", [](const KneserGraph& g, const std::vector<int>& elements) {
        return g.index_of(Subset::from_elements(g.n(), elements));
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<int, std::vector<Color>>(), py::arg("range"), py::arg("colors"))
      .def_property_readonly("range", &Coloring::range)
      .def_property_readonly("colors",
                             [](const Coloring& c) { return std::vector<Color>(c.colors().begin(), c.colors().end()); })
      .def_property_readonly("value", &coloring_value)
      .def("__len__", &Coloring::size)
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; });

  m.def(
      "verify", [](const Graph& g, const Coloring& c, Mode mode) { return violation_dict(verify(g, c, mode)); },
      py::arg("graph"), py::arg("coloring"), py::arg("mode"));
  m.def("ladder_coloring", &ladder_coloring, py::arg("n"), py::arg("k"));
  m.def("double_coloring", &double_coloring, py::arg("graph"), py::arg("proper"));
  m.def("extend_coloring", &extend_coloring, py::arg("coloring"), py::arg("n_minus_1"), py::arg("k"));
  m.def(
      "reduce_coloring",
      [](const KneserGraph& g, const Coloring& c, Color j) {
        ReduceResult r = reduce_coloring(g, c, j);
        return py::make_tuple(r.coloring, r.common_element, r.permutation);
      },
      py::arg("kneser"), py::arg("coloring"), py::arg("j"));
  m.def("smallest_qualifying_class", &smallest_qualifying_class);
  m.def("format_kneser_coloring", &format_kneser_coloring, py::arg("n"), py::arg("k"), py::arg("coloring"),
        py::arg("comment") = "");
  m.def("parse_coloring_file", [](const std::string& text) {
    const ColoringFile f = parse_coloring_file(text);
    return py::make_tuple(f.kneser, f.n, f.k, f.coloring);
  });

  m.def("hm_bound", &hm_bound, py::arg("n"), py::arg("k"));
  m.def(
      "max_nonstar_intersecting",
      [](int n, int k) {
        const NonStarResult r = max_nonstar_intersecting(n, k);
        std::vector<std::vector<int>> witness;
        for (const Subset& s : r.witness) witness.push_back(s.elements());
        return py::make_tuple(r.size, witness);
      },
      py::arg("n"), py::arg("k"));

  m.def(
      "decide",
      [](const Graph& g, int t, Mode mode, std::uint64_t budget, unsigned threads) {
        SolverOptions options;
        options.node_budget = budget;
        options.threads = threads;
        DecideResult r;
        {
          py::gil_scoped_release release;
          r = decide(g, t, mode, options);
        }
        return py::make_tuple(std::string(verdict_name(r.verdict)), r.witness);
      },
      py::arg("graph"), py::arg("t"), py::arg("mode"), py::arg("budget") = SolverOptions{}.node_budget,
      py::arg("threads") = 1);
  m.def(
      "solve",
      [](const Graph& g, Mode mode, int lower, int upper, std::uint64_t budget, unsigned threads,
         bool vertex_transitive) {
        SolverOptions options;
        options.node_budget = budget;
        options.threads = threads;
        options.assume_vertex_transitive = vertex_transitive;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = optimize(g, mode, lower, upper, options);
        }
        return to_python(r);
      },
      py::arg("graph"), py::arg("mode"), py::arg("lower"), py::arg("upper"),
      py::arg("budget") = SolverOptions{}.node_budget, py::arg("threads") = 1,
      py::arg("vertex_transitive") = false);
  m.def(
      "kneser_bracket",
      [](int n, int k, Mode mode) {
        const Bracket b = kneser_bracket(n, k, mode);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("n"), py::arg("k"), py::arg("mode"));
  m.def("export_cnf", &export_cnf, py::arg("graph"), py::arg("t"), py::arg("mode"));

  m.def("maximal_chain_count", &maximal_chain_count, py::arg("n"));
  m.def("fan_census", [](const std::string& text, bool collect, unsigned threads) {
    const FanLabeling l = parse_labeling_file(text);
    AlternatingCensus c;
    {
      py::gil_scoped_release release;
      c = count_alternating(l, collect, threads);
    }
    return to_python(c);
  }, py::arg("labeling_text"), py::arg("collect") = false, py::arg("threads") = 1);
  m.def("fan_validate", [](const std::string& text) -> py::object {
    const auto v = validate_labeling(parse_labeling_file(text));
    if (!v) return py::none();
    return py::str(describe(*v));
  }, py::arg("labeling_text"));
  m.def(
      "coloring_labeling",
      [](const KneserGraph& g, const Coloring& c) { return format_labeling_file(build_coloring_labeling(g, c)); },
      py::arg("kneser"), py::arg("coloring"));

  m.def("bounds_report", [](int n, int k) { return to_python(bounds_report(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("recursion_threshold", &recursion_threshold, py::arg("k"));
  m.def("ineq1_holds", &ineq1_holds, py::arg("n"), py::arg("k"));
  m.def("ineq2_holds", &ineq2_holds, py::arg("a"), py::arg("b"), py::arg("k"));
}

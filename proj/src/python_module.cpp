#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ricci/assignment.hpp"
#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph_spec.hpp"
#include "ricci/theorems.hpp"

namespace py = pybind11;
using namespace ricci;

namespace {

// Rationals cross the boundary as canonical "p/q" strings; the Python
// wrapper turns them into fractions.Fraction.
py::dict report_to_dict(const Graph& g, const EdgeCurvatureReport& r) {
    py::dict d;
    d["x"] = g.label(r.x);
    d["y"] = g.label(r.y);
    d["degree"] = r.degree;
    d["triangle"] = r.triangle_size;
    d["opt"] = r.opt;
    d["max"] = r.max ? py::cast(*r.max) : py::none();
    d["kappa_lly"] = rational_str(r.kappa_lly);
    d["kappa_zero"] = rational_str(r.kappa_zero);
    d["cross_check"] = r.cross_check;
    return d;
}

int resolve(const Graph& g, const std::string& label) { return g.require_label(label); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Ollivier/Lin-Lu-Yau curvature of graph edges";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("labels", &Graph::labels)
        .def("degree", [](const Graph& g, const std::string& v) { return g.degree(resolve(g, v)); })
        .def("neighbors",
             [](const Graph& g, const std::string& v) {
                 std::vector<std::string> out;
                 for (int u : g.neighbors(resolve(g, v))) out.push_back(g.label(u));
                 return out;
             })
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
                 return out;
             })
        .def("distance", [](const Graph& g, const std::string& u, const std::string& v) {
            return graph_distance(g, resolve(g, u), resolve(g, v));
        });

    m.def("build_graph", [](const std::string& spec) { return build_graph(spec).graph; },
          py::arg("spec"), "Evaluate a graph-spec string such as 'strong(cycle:4,h1)'.");

    m.def("kappa_lly",
          [](const Graph& g, const std::string& x, const std::string& y) {
              return rational_str(kappa_lly_assignment(g, resolve(g, x), resolve(g, y)));
          });
    m.def("kappa_zero", [](const Graph& g, const std::string& x, const std::string& y) {
        return rational_str(kappa_zero(g, resolve(g, x), resolve(g, y)));
    });
    m.def("kappa_alpha",
          [](const Graph& g, const std::string& x, const std::string& y, const std::string& alpha) {
              return rational_str(kappa_alpha(g, resolve(g, x), resolve(g, y),
                                              parse_rational(alpha)));
          });
    m.def("opt_value", [](const Graph& g, const std::string& x, const std::string& y) {
        return opt_value(g, resolve(g, x), resolve(g, y));
    });
    m.def("max_over_optimal", [](const Graph& g, const std::string& x, const std::string& y) {
        return max_over_optimal(g, resolve(g, x), resolve(g, y));
    });
    m.def("edge_report", [](const Graph& g, const std::string& x, const std::string& y) {
        return report_to_dict(g, edge_report(g, resolve(g, x), resolve(g, y)));
    });

    m.def("sweep",
          [](const std::string& left, const std::string& right, const std::string& kind,
             const std::vector<std::string>& theorems) {
              if (kind != "strong" && kind != "cartesian")
                  throw ParseError("kind must be 'strong' or 'cartesian'");
              SweepOptions opts;
              opts.theorems = theorems;
              SweepResult result =
                  sweep(build_graph(left).graph, build_graph(right).graph,
                        kind == "strong" ? ProductKind::Strong : ProductKind::Cartesian, opts);
              py::dict d;
              d["checks"] = result.reports.size();
              d["passed"] = result.pass_count;
              d["failed"] = result.fail_count;
              py::list failures;
              for (const auto& r : result.reports)
                  if (!r.holds) failures.append(r.theorem_id + " " + r.instance);
              d["failures"] = failures;
              return d;
          },
          py::arg("left"), py::arg("right"), py::arg("kind") = "strong",
          py::arg("theorems") = std::vector<std::string>{});
}

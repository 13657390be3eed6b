// Python bindings. Reports cross the boundary as JSON text; the Python
// package decodes them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/decomposition.hpp"
#include "hypersimp/forbidden.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/ingest.hpp"
#include "hypersimp/io.hpp"
#include "hypersimp/layout.hpp"
#include "hypersimp/planarity.hpp"
#include "hypersimp/report.hpp"
#include "hypersimp/simplify.hpp"

namespace py = pybind11;
using namespace hypersimp;

namespace {

Hypergraph make_hypergraph(const std::map<std::string, std::vector<std::string>>& hyperedges,
                           const std::vector<std::string>& vertices) {
  Hypergraph h;
  for (const auto& v : vertices) h.add_vertex(v);
  for (const auto& [e, members] : hyperedges) {
    for (const auto& v : members) h.add_vertex(v);
    h.add_hyperedge(e, Hypergraph::Members(members.begin(), members.end()));
  }
  h.validate();
  return h;
}

std::map<std::string, std::vector<std::string>> hyperedge_dict(const Hypergraph& h) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [e, m] : h.hyperedges()) out[e] = {m.begin(), m.end()};
  return out;
}

std::string decompose_json(const Hypergraph& h, unsigned jobs) {
  const auto g = build_bipartite(h);
  DecompositionOptions opts;
  opts.jobs = jobs;
  return decomposition_report(g, topological_decomposition(g, opts)).dump();
}

std::string forbidden_json(const Hypergraph& h) {
  const auto g = build_bipartite(h);
  const auto d = topological_decomposition(g);
  return forbidden_report(g, d, analyze_forbidden(g, d)).dump();
}

std::string stats_json(const Hypergraph& h) {
  const auto g = build_bipartite(h);
  return stats_report(h, topological_decomposition(g)).dump();
}

py::tuple simplify_py(const Hypergraph& h, double alpha, double beta, double gamma, double delta, bool planar,
                      bool eta, std::optional<std::size_t> max_ops, double eta_threshold, double prune_threshold,
                      std::uint64_t seed, bool full_recompute, unsigned jobs) {
  PriorityParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = delta;
  p.target = {planar, eta, max_ops};
  p.eta_threshold = eta_threshold;
  p.prune_threshold = prune_threshold;
  p.seed = seed;
  p.full_recompute = full_recompute;
  p.jobs = jobs;
  p.validate();
  SimplifyResult r;
  {
    py::gil_scoped_release release;
    r = simplify(h, p);
  }
  return py::make_tuple(r.hypergraph, oplog_to_json(r.log).dump());
}

std::map<std::string, std::pair<double, double>> layout_py(const Hypergraph& h, std::uint64_t seed,
                                                           std::size_t iterations) {
  std::map<std::string, std::pair<double, double>> out;
  for (const auto& [id, p] : force_layout(h, seed, iterations).positions) out[id] = {p.x, p.y};
  return out;
}

std::string render_py(const Hypergraph& h, std::optional<std::map<std::string, std::pair<double, double>>> positions,
                      std::optional<std::string> log_json, std::uint64_t seed, std::size_t iterations, double width,
                      double height) {
  Layout layout;
  if (positions) {
    for (const auto& [id, xy] : *positions) layout.positions[id] = {xy.first, xy.second};
  } else {
    layout = force_layout(h, seed, iterations);
  }
  std::vector<CutAnnotation> ann;
  if (log_json) ann = live_annotations(h, oplog_from_json(Json::parse(*log_json)));
  RenderSpec spec;
  spec.width = width;
  spec.height = height;
  return render_svg(h, layout, spec, ann);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypergraph decomposition and simplification core";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<RenderError> render_error(m, "RenderError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const ValidationError& e) {
      validation_error(e.what());
    } catch (const RenderError& e) {
      render_error(e.what());
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&make_hypergraph), py::arg("hyperedges") = std::map<std::string, std::vector<std::string>>{},
           py::arg("vertices") = std::vector<std::string>{})
      .def_property_readonly("vertices", [](const Hypergraph& h) { return std::vector<std::string>(h.vertices().begin(), h.vertices().end()); })
      .def_property_readonly("hyperedges", &hyperedge_dict)
      .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
      .def_property_readonly("hyperedge_count", &Hypergraph::hyperedge_count)
      .def("dual", [](const Hypergraph& h) { return dualize(h); })
      .def("to_json", [](const Hypergraph& h) { return serialize_hypergraph(h, Format::Json); })
      .def("to_edgelist", [](const Hypergraph& h) { return serialize_hypergraph(h, Format::Edgelist); })
      .def_static("from_json", [](const std::string& t) { return parse_hypergraph(t, Format::Json); })
      .def_static("from_edgelist", [](const std::string& t) { return parse_hypergraph(t, Format::Edgelist); })
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph |V|=" + std::to_string(h.vertex_count()) + " |E|=" + std::to_string(h.hyperedge_count()) + ">";
      });

  m.def("betti", [](const Hypergraph& h) {
    const auto b = betti_numbers(h);
    return std::make_pair(b.b0, b.b1);
  });
  m.def("_decompose", &decompose_json, py::arg("h"), py::arg("jobs") = 1);
  m.def("_forbidden", &forbidden_json);
  m.def("_planarity", [](const Hypergraph& h, std::uint64_t seed) { return planarity_report(h, seed).dump(); },
        py::arg("h"), py::arg("seed") = 42);
  m.def("_stats", &stats_json);
  m.def("has_forbidden", [](const Hypergraph& h) { return has_forbidden(h); });
  m.def("is_zykov_planar", &is_zykov_planar);
  m.def("is_convex_polygon_planar", &is_convex_polygon_planar);
  m.def("_simplify", &simplify_py, py::arg("h"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        py::arg("delta"), py::arg("planar"), py::arg("eta"), py::arg("max_ops"), py::arg("eta_threshold"),
        py::arg("prune_threshold"), py::arg("seed"), py::arg("full_recompute"), py::arg("jobs"));
  m.def("_replay", [](const Hypergraph& h, const std::string& log) { return replay(h, oplog_from_json(Json::parse(log))); });
  m.def("force_layout", &layout_py, py::arg("h"), py::arg("seed") = 42, py::arg("iterations") = 300);
  m.def("_render", &render_py);
  m.def("ingest_contacts", [](const std::string& text, std::int64_t threshold) {
    return ingest_contacts(parse_contacts(text), threshold);
  }, py::arg("text"), py::arg("min_contact_seconds") = 40);
  m.def("ingest_friendship", [](const std::string& text) { return ingest_friendship(parse_friendships(text)); });
  m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;
  m.attr("INF") = std::numeric_limits<double>::infinity();
}

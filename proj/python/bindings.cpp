#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "resistor/baselines.hpp"
#include "resistor/errors.hpp"
#include "resistor/graph.hpp"
#include "resistor/lanczos.hpp"
#include "resistor/lanczos_push.hpp"
#include "resistor/routing.hpp"
#include "resistor/spectral.hpp"

namespace py = pybind11;
using namespace resistor;

namespace {

Graph graph_from_tuples(std::size_t n, const std::vector<py::tuple>& edges, bool largest) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != 2 && e.size() != 3) throw py::value_error("edges are (u, v) or (u, v, w)");
    list.push_back({e[0].cast<Vertex>(), e[1].cast<Vertex>(), e.size() == 3 ? e[2].cast<double>() : 1.0});
  }
  return largest ? Graph::largest_component(n, list) : Graph::from_edges(n, list);
}

py::list flow_list(const FlowMap& f) {
  py::list out;
  for (std::size_t e = 0; e < f.edges.size(); ++e) out.append(py::make_tuple(f.edges[e].u, f.edges[e].v, f.flow[e]));
  return out;
}

}  // namespace

PYBIND11_MODULE(_resistor, m) {
  m.doc() = "Resistance distance estimators on undirected graphs";

  static py::exception<SingularSystemError> singular(m, "SingularSystemError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SingularSystemError& e) {
      py::set_error(singular, e.what());
    } catch (const IoError& e) {
      py::set_error(PyExc_OSError, e.what());
    } catch (const ParseError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const EmptyGraphError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges", &graph_from_tuples, py::arg("n"), py::arg("edges"), py::arg("largest_component") = false,
                  "Build from (u, v) or (u, v, w) tuples over vertices 0..n-1.")
      .def_static("load", &load_graph, py::arg("path"), py::arg("weighted") = false,
                  "Edge list or .rdg cache; keeps the largest component.")
      .def_property_readonly("n", &Graph::node_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("weighted", &Graph::is_weighted)
      .def("degree", &Graph::degree)
      .def("external_ids", &Graph::external_ids)
      .def("internal_id", &Graph::internal_id)
      .def("edges", [](const Graph& g) {
        std::vector<std::tuple<Vertex, Vertex, double>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("erdos_renyi", &generate_er, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("barabasi_albert", &generate_ba, py::arg("n"), py::arg("attach"), py::arg("seed"));
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));

  py::class_<RDEstimate>(m, "Estimate")
      .def_readonly("value", &RDEstimate::value)
      .def_readonly("iterations", &RDEstimate::iterations)
      .def_readonly("touched_edges", &RDEstimate::touched_edges)
      .def_readonly("seconds", &RDEstimate::seconds)
      .def_property_readonly("method", [](const RDEstimate& e) { return std::string(method_tag(e.method)); })
      .def("__float__", [](const RDEstimate& e) { return e.value; })
      .def("__repr__", [](const RDEstimate& e) {
        return "<Estimate " + std::string(method_tag(e.method)) + " " + std::to_string(e.value) + ">";
      });

  m.def("exact_rd", [](const Graph& g, Vertex s, Vertex t) { return exact_rd(g, s, t); }, py::arg("graph"),
        py::arg("s"), py::arg("t"));
  m.def("power_method_rd", [](const Graph& g, Vertex s, Vertex t, std::size_t l) { return power_method_rd(g, s, t, l); },
        py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("l"));
  m.def("random_walk_rd", &random_walk_rd, py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("l"), py::arg("nr"),
        py::arg("seed") = 1, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("lanczos_rd", [](const Graph& g, Vertex s, Vertex t, std::size_t k) { return lanczos_rd(g, s, t, k).estimate; },
        py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k"));
  m.def("lanczos_tridiagonal", [](const Graph& g, Vertex s, Vertex t, std::size_t k) {
        const LanczosResult r = lanczos_rd(g, s, t, k);
        return py::make_tuple(r.run.t.alpha, r.run.t.beta);
      }, py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k"), "(alpha, beta) of the tridiagonal T.");

  py::class_<PushResult>(m, "PushResult")
      .def_readonly("estimate", &PushResult::estimate)
      .def_property_readonly("alpha", [](const PushResult& r) { return r.t.alpha; })
      .def_property_readonly("beta", [](const PushResult& r) { return r.t.beta; })
      .def_readonly("k_effective", &PushResult::k_effective)
      .def_readonly("breakdown", &PushResult::breakdown)
      .def_property_readonly("c2", [](const PushResult& r) { return measure_c2(r.stats); });
  m.def("lanczos_push_rd", [](const Graph& g, Vertex s, Vertex t, std::size_t k, double eps) {
        PushConfig cfg;
        cfg.k = k;
        cfg.epsilon = eps;
        cfg.collect_stats = true;
        return lanczos_push_rd(g, s, t, cfg);
      }, py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k") = 10, py::arg("eps") = 1e-3);

  py::class_<SpectralEstimate>(m, "Spectrum")
      .def_readonly("lambda2", &SpectralEstimate::lambda2_a)
      .def_readonly("lambda_min", &SpectralEstimate::lambda_min_a)
      .def_readonly("kappa", &SpectralEstimate::kappa)
      .def_readonly("iterations", &SpectralEstimate::iterations)
      .def_readonly("converged", &SpectralEstimate::converged);
  m.def("estimate_spectrum", &estimate_spectrum, py::arg("graph"), py::arg("tol") = 1e-9,
        py::arg("max_iter") = 2'000'000, py::call_guard<py::gil_scoped_release>());
  m.def("dense_eigenvalues", [](const Graph& g) { return dense_spectrum(g).eigenvalues; }, py::arg("graph"),
        "Eigenvalues of the normalized adjacency, ascending (small graphs only).");

  m.def("electric_flow", [](const Graph& g, Vertex s, Vertex t, std::size_t k) { return flow_list(electric_flow(g, s, t, k)); },
        py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k"), "[(u, v, current)] with u < v.");

  py::class_<Route>(m, "Route")
      .def_readonly("vertices", &Route::vertices)
      .def_readonly("length", &Route::length)
      .def_readonly("bottleneck", &Route::bottleneck);
  m.def("extract_routes", [](const Graph& g, Vertex s, Vertex t, std::size_t k, std::size_t l) {
        return extract_routes(g, s, t, k, l).routes;
      }, py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k"), py::arg("l"));
  m.def("route_metrics", [](const Graph& g, const std::vector<Route>& routes, Vertex s, Vertex t, double p,
                            std::size_t trials, std::uint64_t seed) {
        const RouteMetrics r = route_metrics(g, routes, s, t, p, trials, seed);
        py::dict out;
        out["stretch"] = r.stretch;
        out["diversity"] = r.diversity;
        out["robustness"] = r.robustness;
        out["shortest"] = r.shortest;
        return out;
      }, py::arg("graph"), py::arg("routes"), py::arg("s"), py::arg("t"), py::arg("p_delete") = 0.1,
        py::arg("trials") = 1000, py::arg("seed") = 1);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>
#include <vector>

#include "algraph/cycles.hpp"
#include "algraph/distances.hpp"
#include "algraph/errors.hpp"
#include "algraph/graph.hpp"
#include "algraph/matching.hpp"
#include "algraph/options.hpp"

namespace py = pybind11;
using namespace algraph;

namespace {

using EdgeTuple = std::tuple<int, int, std::int64_t>;

Graph make_graph(bool directed, int n, const std::vector<EdgeTuple>& edges, std::int64_t W) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
  return Graph(directed, n, std::move(es), W);
}

std::vector<EdgeTuple> edge_tuples(const std::vector<Edge>& edges) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v, e.w);
  return out;
}

Options options(u64 seed, u64 prime) {
  Options o;
  o.seed = seed;
  o.prime = prime;
  return o;
}

const char* status_name(CycleStatus s) {
  switch (s) {
    case CycleStatus::Found: return "found";
    case CycleStatus::NoCycle: return "no_cycle";
    case CycleStatus::NegativeCycle: return "negative_cycle";
  }
  return "unknown";
}

py::dict cycle_dict(const CycleResult& r) {
  py::dict d;
  d["status"] = status_name(r.status);
  d["weight"] = r.status == CycleStatus::Found ? py::cast(r.weight) : py::none();
  d["cycle"] = r.cycle;
  d["error_bound"] = r.error_bound;
  return d;
}

std::vector<std::vector<Distance>> rows(const DistanceMatrix& m) {
  std::vector<std::vector<Distance>> out(static_cast<std::size_t>(m.n));
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) out[static_cast<std::size_t>(i - 1)].push_back(m.at(i, j));
  return out;
}

}  // namespace

PYBIND11_MODULE(_algraph, m) {
  m.doc() = "Shortest cycles, distances and minimum weight perfect matchings via polynomial matrices";

  auto base = py::register_exception<Error>(m, "AlgraphError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NegativeCycle>(m, "NegativeCycleError", base.ptr());
  py::register_exception<NoPerfectMatching>(m, "NoPerfectMatchingError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("directed"), py::arg("n"), py::arg("edges"),
           py::arg("W") = -1)
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("W", &Graph::W)
      .def_property_readonly("edges", [](const Graph& g) { return edge_tuples(g.edges()); })
      .def("to_json", [](const Graph& g) { return to_json(g); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(directed=" + std::string(g.directed() ? "True" : "False") +
               ", n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edges().size()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("load_graph", &load_graph, py::arg("path"));

  const u64 p = PrimeField::kMersenne61;
  auto seed = py::arg("seed") = u64{1};
  auto prime = py::arg("prime") = p;

  m.def("shortest_cycle",
        [](const Graph& g, u64 s, u64 q) { return cycle_dict(shortest_cycle(g, options(s, q))); },
        py::arg("graph"), seed, prime);
  m.def("has_negative_cycle",
        [](const Graph& g, u64 s, u64 q) { return has_negative_cycle(g, options(s, q)); },
        py::arg("graph"), seed, prime);
  m.def("vertices_on_short_cycles",
        [](const Graph& g, std::int64_t t, u64 s, u64 q) {
          return vertices_on_short_cycles(g, t, options(s, q));
        },
        py::arg("graph"), py::arg("t"), seed, prime);
  m.def("distances",
        [](const Graph& g, u64 s, u64 q) { return rows(distances(g, options(s, q))); },
        py::arg("graph"), seed, prime);
  m.def("eccentricities",
        [](const Graph& g, u64 s, u64 q) { return eccentricities(g, options(s, q)); },
        py::arg("graph"), seed, prime);
  m.def("diameter", [](const Graph& g, u64 s, u64 q) { return diameter(g, options(s, q)); },
        py::arg("graph"), seed, prime);
  m.def("radius", [](const Graph& g, u64 s, u64 q) { return radius(g, options(s, q)); },
        py::arg("graph"), seed, prime);
  m.def("check_diameter_at_most",
        [](const Graph& g, std::int64_t c, u64 s, u64 q) {
          return check_diameter_at_most(g, c, options(s, q));
        },
        py::arg("graph"), py::arg("c"), seed, prime);
  m.def("allowed_edges",
        [](const Graph& g, u64 s, u64 q) { return edge_tuples(allowed_edges(g, options(s, q))); },
        py::arg("graph"), seed, prime);
  m.def("mwpm",
        [](const Graph& g, u64 s, u64 q) {
          Matching mt = mwpm(g, options(s, q));
          return py::make_tuple(mt.weight, edge_tuples(mt.edges));
        },
        py::arg("graph"), seed, prime);
  m.def("second_smallest_pm_weight",
        [](const Graph& g, u64 s, u64 q) { return second_smallest_pm_weight(g, options(s, q)); },
        py::arg("graph"), seed, prime);
}

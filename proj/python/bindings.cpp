#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <span>

#include "mcover/cover.hpp"
#include "mcover/gallai_edmonds.hpp"
#include "mcover/oracle.hpp"
#include "mcover/random_graph.hpp"

namespace py = pybind11;
using namespace mcover;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_graph(Vertex n, const EdgeList& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

EdgeList edge_list(std::span<const Edge> edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict solve_dict(const Graph& g) {
  const SolveResult r = solve(g);
  py::list matchings;
  for (const Matching& m : r.cover.matchings) matchings.append(edge_list(m.edges()));
  py::dict out;
  out["mc"] = r.cover.size();
  out["branch"] = std::string(branch_name(r.branch));
  out["md"] = r.md;
  out["transforms"] = r.transforms;
  out["gstar_vertices"] = r.gstar_vertices;
  out["matchings"] = matchings;
  return out;
}

bool verify(const Graph& g, const std::vector<EdgeList>& levels) {
  MatchingCover cover;
  for (const EdgeList& level : levels) {
    Matching m(g.num_vertices());
    for (auto [u, v] : level) {
      if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || u == v) return false;
      if (m.is_matched(u) || m.is_matched(v)) return false;
      m.match(u, v);
    }
    cover.matchings.push_back(std::move(m));
  }
  return verify_cover(g, cover);
}

oracle::OracleBudget budget(int max_vertices, int max_edges) {
  oracle::OracleBudget b;
  b.max_vertices = max_vertices;
  b.max_edges = max_edges;
  return b;
}

}  // namespace

PYBIND11_MODULE(_mcover, m) {
  m.doc() = "Optimal matching covers of simple graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NoCoverError>(m, "NoCoverError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           "Simple graph on vertices 0..n-1 from (u, v) pairs.")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", [](const Graph& g) { return edge_list(g.edges()); })
      .def("degree", &Graph::degree)
      .def("__str__", [](const Graph& g) { return serialize_graph(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse the `p n m` / `e u v` text format (1-indexed).");
  m.def("solve", &solve_dict, py::arg("graph"),
        "Optimal matching cover: dict with mc, branch, md, transforms, gstar_vertices and "
        "matchings (lists of 0-indexed edges).");
  m.def("verify_cover", &verify, py::arg("graph"), py::arg("matchings"));
  m.def("maximum_matching", [](const Graph& g) { return edge_list(maximum_matching(g).edges()); },
        py::arg("graph"));
  m.def(
      "decompose",
      [](const Graph& g) {
        const GallaiEdmonds ge = decompose(g);
        py::dict out;
        out["d"] = ge.d.members();
        out["a"] = ge.a.members();
        out["c"] = ge.c.members();
        out["matching"] = edge_list(ge.max_matching.edges());
        return out;
      },
      py::arg("graph"), "Gallai-Edmonds sets D, A, C and the maximum matching used.");
  m.def(
      "brute_mc",
      [](const Graph& g, int max_vertices, int max_edges) {
        return oracle::brute_mc(g, budget(max_vertices, max_edges));
      },
      py::arg("graph"), py::arg("max_vertices") = 12, py::arg("max_edges") = 24);
  m.def(
      "brute_nu",
      [](const Graph& g, int max_vertices, int max_edges) {
        return oracle::brute_nu(g, budget(max_vertices, max_edges));
      },
      py::arg("graph"), py::arg("max_vertices") = 12, py::arg("max_edges") = 24);
  m.def(
      "random_connected_gnp",
      [](Vertex n, double p, std::uint64_t seed) {
        Rng rng(seed);
        return random_connected_gnp(n, p, rng);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "random_connected_gnm",
      [](Vertex n, std::size_t edges, std::uint64_t seed) {
        Rng rng(seed);
        return random_connected_gnm(n, edges, rng);
      },
      py::arg("n"), py::arg("m"), py::arg("seed"));
}

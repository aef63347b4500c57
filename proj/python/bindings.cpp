#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphroots/cliques.hpp"
#include "graphroots/error.hpp"
#include "graphroots/graph.hpp"
#include "graphroots/io.hpp"
#include "graphroots/oracle.hpp"
#include "graphroots/reduction.hpp"
#include "graphroots/root6.hpp"
#include "graphroots/root7.hpp"

namespace py = pybind11;
using namespace graphroots;

namespace {

Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

py::object girth_value(Girth g) {
  if (g.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(g.length());
}

py::dict root_dict(const RootResult& r) {
  py::dict d;
  d["verdict"] = std::string(to_string(r.verdict));
  d["reason"] = r.reason ? py::object(py::str(std::string(to_string(*r.reason)))) : py::none();
  d["root"] = r.root ? py::cast(*r.root) : py::none();
  d["girth"] = r.root_girth ? girth_value(*r.root_girth) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Square roots of graphs under girth constraints";

  static py::exception<Error> error(m, "GraphRootsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      error((std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what()).c_str());
    } catch (const Error& e) {
      error((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.num_vertices()) throw py::index_error("vertex out of range");
        return VertexSet(g.neighbors(v).begin(), g.neighbors(v).end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("to_edge_list", &to_edge_list);
  m.def("power", &power, py::arg("g"), py::arg("k"));
  m.def("square", &square);
  m.def("girth", [](const Graph& g) { return girth_value(girth(g)); },
        "Shortest cycle length, or math.inf for forests.");
  m.def("is_isomorphic", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b); });
  m.def("check_square_root", &check_square_root, py::arg("h"), py::arg("g"));

  m.def("maximal_cliques",
        [](const Graph& g, std::optional<std::size_t> cap) {
          const CliqueList l = enumerate_maximal_cliques(g, cap);
          return py::make_tuple(l.cliques, l.complete);
        },
        py::arg("g"), py::arg("cap") = py::none(),
        "Returns (cliques, complete).");
  m.def("max_weight_clique",
        [](const Graph& g, const std::vector<double>& w, std::size_t cap) {
          const WeightedClique c = max_weight_clique(g, w, cap);
          return py::make_tuple(c.vertices, c.weight);
        },
        py::arg("g"), py::arg("weights"), py::arg("cap"));

  m.def("recognize_root7", [](const Graph& g) { return root_dict(recognize_root7(g)); });
  m.def("recognize_bipartite_c4c6free",
        [](const Graph& g) { return root_dict(recognize_bipartite_c4c6free(g)); });
  m.def("recognize_girth6", [](const Graph& g) { return root_dict(recognize_girth6(g)); });
  m.def("root_with_edge",
        [](const Graph& g, Vertex x, Vertex y) { return root_dict(root_with_edge(g, x, y)); });
  m.def("root_with_neighborhood",
        [](const Graph& g, Vertex v, const VertexSet& u) -> std::optional<Graph> {
          return root_with_neighborhood(g, v, u).root;
        },
        py::arg("g"), py::arg("v"), py::arg("u_set"));

  m.def("find_roots",
        [](const Graph& g, std::optional<int> girth_min, std::optional<int> girth_exact,
           std::vector<int> forbid, std::size_t limit, std::uint64_t budget, bool pruning) {
          RootQuery q;
          q.g = g;
          q.girth_min = girth_min;
          q.girth_exact = girth_exact;
          q.forbidden_cycles = std::move(forbid);
          q.limit = limit;
          q.budget = budget;
          q.pruning = pruning;
          RootSearch s;
          {
            py::gil_scoped_release release;
            s = find_roots(q);
          }
          py::dict d;
          d["roots"] = s.roots;
          d["status"] = std::string(to_string(s.status));
          d["exhausted"] = s.exhausted;
          d["nodes"] = s.nodes;
          return d;
        },
        py::arg("g"), py::kw_only(), py::arg("girth_min") = py::none(),
        py::arg("girth_exact") = py::none(), py::arg("forbidden_cycles") = std::vector<int>{},
        py::arg("limit") = 1, py::arg("budget") = 50'000'000, py::arg("pruning") = true);

  m.def("build_reduction",
        [](int n, const std::vector<std::vector<int>>& subsets) {
          const ReductionInstance ri = build_instance({n, subsets});
          std::vector<std::string> roles;
          for (const Role& r : ri.roles) roles.push_back(role_name(r));
          return py::make_tuple(ri.graph, roles);
        },
        py::arg("n"), py::arg("subsets"), "Returns (graph, role names).");
  m.def("extract_partition",
        [](int n, const std::vector<std::vector<int>>& subsets, const Graph& h) {
          const Extraction ex = extract_partition(build_instance({n, subsets}), h);
          return py::make_tuple(ex.partition.block1, ex.partition.block2,
                                std::string(to_string(ex.strategy)));
        },
        py::arg("n"), py::arg("subsets"), py::arg("root"));
  m.def("validate_splitting",
        [](int n, const std::vector<std::vector<int>>& subsets, const std::vector<int>& b1,
           const std::vector<int>& b2) {
          return validate_splitting({n, subsets}, {b1, b2});
        });
}

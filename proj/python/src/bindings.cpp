#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "z3flow/canonical.hpp"
#include "z3flow/catalog.hpp"
#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/io.hpp"
#include "z3flow/orientation.hpp"
#include "z3flow/reduction.hpp"
#include "z3flow/verifier.hpp"

namespace py = pybind11;
using namespace z3flow;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object orientation_py(const std::optional<Orientation>& o) {
  if (!o) return py::none();
  py::dict d;
  for (const Arc& a : o->arcs) d[py::int_(a.edge)] = py::make_tuple(a.tail, a.head);
  return d;
}

py::object cut_py(const std::optional<CutReport>& c) {
  if (!c) return py::none();
  return py::make_tuple(c->size, c->witness);
}

py::tuple contraction_py(const ContractionResult& r) {
  return py::make_tuple(r.graph, to_py(trace_to_json(r.trace)));
}

Multigraph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Multigraph g = Multigraph::with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mod-3 orientations, Z3-connectivity and graph reductions";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init<>())
      .def(py::init(&Multigraph::with_vertices), py::arg("n"))
      .def_static("from_edges", &from_edges, py::arg("n"), py::arg("edges"))
      .def("add_vertex", py::overload_cast<>(&Multigraph::add_vertex))
      .def("add_edge", py::overload_cast<VertexId, VertexId>(&Multigraph::add_edge))
      .def("remove_edge", &Multigraph::remove_edge)
      .def("remove_vertex", &Multigraph::remove_vertex)
      .def_property_readonly("num_vertices", &Multigraph::num_vertices)
      .def_property_readonly("num_edges", &Multigraph::num_edges)
      .def("vertices", [](const Multigraph& g) {
        return std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
      })
      .def("edges", [](const Multigraph& g) {
        std::vector<std::tuple<EdgeId, VertexId, VertexId>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.id, e.u, e.v);
        return out;
      })
      .def("degree", &Multigraph::degree)
      .def("multiplicity", &Multigraph::multiplicity)
      .def("is_simple", &Multigraph::is_simple)
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "<Multigraph |V|=" + std::to_string(g.num_vertices()) +
               " |E|=" + std::to_string(g.num_edges()) + ">";
      });

  // io
  m.def("parse_graph", [](const std::string& text, const std::string& fmt) {
    return parse_graph(text, fmt == "auto" ? GraphFormat::detect : parse_format_name(fmt));
  }, py::arg("text"), py::arg("format") = "auto");
  m.def("to_edgelist", &to_edgelist);
  m.def("to_graph6", &to_graph6);
  m.def("to_json", [](const Multigraph& g) { return to_py(graph_to_json(g)); });
  m.def("to_dot", [](const Multigraph& g) { return to_dot(g); });

  // graph operations
  m.def("contract", [](const Multigraph& g, const VertexSet& s) {
    return contraction_py(contract(g, s));
  });
  m.def("lift", &lift, py::arg("g"), py::arg("v"), py::arg("e1"), py::arg("e2"));

  // connectivity
  m.def("edge_connectivity", [](const Multigraph& g) {
    return cut_py(edge_connectivity(g));
  });
  m.def("odd_edge_connectivity", [](const Multigraph& g) {
    return cut_py(odd_edge_connectivity(g));
  });
  m.def("essential_edge_connectivity", [](const Multigraph& g) {
    return cut_py(essential_edge_connectivity(g));
  });
  m.def("independence_number", [](const Multigraph& g) {
    IndependentSet s = independence_number(g);
    return py::make_tuple(s.size, s.members);
  });

  // orientations
  m.def("mod3_orientation", [](const Multigraph& g) {
    return orientation_py(mod3_orientation(g));
  });
  m.def("z3_orientation", [](const Multigraph& g, const std::vector<int>& b) {
    return orientation_py(z3_orientation(g, Z3Boundary{b}));
  }, py::arg("g"), py::arg("boundary"));
  m.def("orient_with_imbalance", [](const Multigraph& g, const std::vector<int>& l) {
    return orientation_py(orient_with_imbalance(g, ImbalanceSpec{l}));
  }, py::arg("g"), py::arg("imbalance"));
  m.def("is_z3_connected", py::overload_cast<const Multigraph&>(&is_z3_connected));

  // canonical forms
  m.def("canonical_certificate", [](const Multigraph& g) {
    CanonicalForm f = canonical_form(g);
    return py::make_tuple(f.n, f.certificate);
  });
  m.def("isomorphic", &isomorphic);

  // reductions
  m.def("find_wheel", [](const Multigraph& g, const std::string& parity) -> py::object {
    WheelParity p = parity == "odd" ? WheelParity::odd
                    : parity == "even" ? WheelParity::even : WheelParity::any;
    auto w = find_wheel(g, p);
    if (!w) return py::none();
    return py::make_tuple(w->center, w->rim);
  }, py::arg("g"), py::arg("parity") = "any");
  m.def("w_contract", [](const Multigraph& g, VertexId center, const std::vector<VertexId>& rim,
                         const VertexSet& x) {
    WContractionSpec spec;
    spec.wheel = WheelWitness{center, rim, rim.size() % 2 == 1};
    spec.x = normalized(x);
    for (VertexId v : spec.wheel.vertices()) {
      if (!std::binary_search(spec.x.begin(), spec.x.end(), v)) spec.y.push_back(v);
    }
    return contraction_py(w_contract(g, spec));
  }, py::arg("g"), py::arg("center"), py::arg("rim"), py::arg("x"));
  m.def("z3_reduce", [](const Multigraph& g, int cap) {
    return contraction_py(z3_reduce(g, cap));
  }, py::arg("g"), py::arg("size_cap") = kDefaultSizeCap);
  m.def("is_z3_reduced", &is_z3_reduced);
  m.def("split_vertex", [](const Multigraph& g, VertexId v, int k) -> py::object {
    auto s = split_vertex(g, v, k);
    if (!s) return py::none();
    return py::make_tuple(s->graph, s->first, s->second);
  }, py::arg("g"), py::arg("v"), py::arg("k"));

  // catalog
  m.def("catalog_list", &catalog::list);
  m.def("catalog_get", [](const std::string& name, std::optional<int> n) {
    return catalog::get(name, n).graph;
  }, py::arg("name"), py::arg("n") = py::none());
  m.def("catalog_verify", [](const std::string& name, std::optional<int> n) {
    return catalog::verify_claims(name, n).pass();
  }, py::arg("name"), py::arg("n") = py::none());
  m.def("catalog_verify_all", [] {
    py::dict out;
    for (const auto& r : catalog::verify_all()) out[py::str(r.name)] = r.pass();
    return out;
  });

  // verification
  m.def("r_row", [](int n, bool allow_long) {
    return to_py(verify::to_json(verify::r_row(n, allow_long), false));
  }, py::arg("n"), py::arg("allow_long") = false);
  m.def("family_verdict", [](const Multigraph& g) {
    return to_py(verify::to_json(verify::family_verdict(g)));
  });
  m.def("decide_nz3f", [](const Multigraph& g) { return verify::decide_nz3f(g).feasible; });
  m.def("lemma_ids", &verify::sweep_ids);
  m.def("lemma_sweep", [](const std::string& id, std::int64_t samples, std::uint64_t seed,
                          int threads) {
    verify::SweepReport r;
    {
      py::gil_scoped_release release;
      r = verify::lemma_sweep(id, samples, seed, threads);
    }
    return to_py(verify::to_json(r, false));
  }, py::arg("id"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 1);
}

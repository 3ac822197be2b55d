#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "upg/claims.hpp"
#include "upg/cli.hpp"

namespace py = pybind11;
using namespace upg;

namespace {

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

SimpleGraph graph_of(const FiniteRing& ring, const std::string& which) {
  auto g = unity_product_graph(units(ring));
  if (which == "upg") return g;
  if (which == "complement") return complement(g);
  throw py::value_error("graph must be 'upg' or 'complement'");
}

}  // namespace

PYBIND11_MODULE(_upg, m) {
  m.doc() = "Unity product graphs of finite commutative rings";

  py::register_exception<RingError>(m, "RingError", PyExc_ValueError);
  py::register_exception<UnknownClaimError>(m, "UnknownClaimError", PyExc_KeyError);
  py::register_exception<VertexBoundError>(m, "VertexBoundError", PyExc_RuntimeError);

  py::class_<FiniteRing>(m, "FiniteRing")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("label", &FiniteRing::label)
      .def_property_readonly("zero", &FiniteRing::zero)
      .def_property_readonly("unity", &FiniteRing::unity)
      .def_property_readonly("has_unity", &FiniteRing::has_unity)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("element_name", &FiniteRing::element_name)
      .def("__repr__", [](const FiniteRing& r) { return "<FiniteRing " + r.label() + ">"; });

  m.def("ring", [](const std::string& spec, std::size_t cap) { return RingFamilySpec::parse(spec).build(cap); },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, "Build a ring from a spec such as 'zmod:11'.");
  m.def("zmod", [](std::size_t n) { return zmod(n); }, py::arg("n"));
  m.def("gf", [](std::size_t p, std::size_t k) { return gf(p, k); }, py::arg("p"), py::arg("k") = 1);
  m.def("boolean_ring", [](std::size_t n) { return boolean_ring(n); }, py::arg("copies"));
  m.def("direct_product", [](const std::vector<FiniteRing>& rs) { return direct_product(rs); });
  m.def("units", [](const FiniteRing& r) { return units(r).elements(); },
        "Unit element indices, ascending.");
  m.def("characteristic", &characteristic);

  py::class_<SimpleGraph>(m, "Graph")
      .def_property_readonly("n", &SimpleGraph::size)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def("edges", &SimpleGraph::edges)
      .def("degree", &SimpleGraph::degree)
      .def("adjacent", &SimpleGraph::adjacent)
      .def("to_dot", [](const SimpleGraph& g) { return export_dot(g); })
      .def("to_json", &export_json);

  m.def("graph", &graph_of, py::arg("ring"), py::arg("which") = "upg");
  m.def("analyze", [](const SimpleGraph& g) { return json_to_py(report_json(full_report(g))); },
        "Every invariant as a dict; infinite values are 'inf'.");

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : builtin_claims()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "verify",
      [](const std::vector<std::string>& claims, const std::vector<std::string>& include, std::size_t zmod_max,
         bool defaults) {
        std::vector<RingFamilySpec> specs;
        if (defaults) specs = default_sweep_specs(zmod_max);
        for (const auto& s : include) specs.push_back(RingFamilySpec::parse(s));
        const auto verdicts = run_sweep(select_claims(claims), specs);
        py::list out;
        for (const auto& v : verdicts) {
          py::dict d;
          d["claim"] = v.claim_id;
          d["ring"] = v.ring_label;
          d["outcome"] = std::string(outcome_name(v.outcome));
          d["witness"] = v.witness;
          out.append(d);
        }
        return out;
      },
      py::arg("claims") = std::vector<std::string>{"all"}, py::arg("include") = std::vector<std::string>{},
      py::arg("zmod_max") = 60, py::arg("default_families") = true);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line front end; returns (exit_code, stdout, stderr).");
}

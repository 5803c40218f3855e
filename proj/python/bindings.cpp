#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperbfs/cli.hpp"
#include "hyperbfs/errors.hpp"
#include "hyperbfs/formats.hpp"

namespace py = pybind11;
using namespace hyperbfs;

namespace {

py::object witness_names(const ValueSet& vs, const CheckResult& r) {
  if (!r.witness) return py::none();
  py::list out;
  for (Value v : *r.witness) out.append(vs.name(v));
  return py::tuple(out);
}

py::dict profile_dict(const ValueSet& vs) {
  const auto p = profile(vs);
  py::dict d;
  const std::pair<const char*, const CheckResult*> checks[] = {
      {"zero_sum_free", &p.zero_sum_free}, {"zero_divisor_free", &p.zero_divisor_free},
      {"zero_annihilates", &p.zero_annihilates}, {"plus_assoc", &p.plus_assoc},
      {"plus_comm", &p.plus_comm}, {"times_assoc", &p.times_assoc},
      {"times_comm", &p.times_comm}};
  for (const auto& [name, r] : checks) d[name] = py::make_tuple(r->holds, witness_names(vs, *r));
  d["bfs_valid"] = p.bfs_valid();
  return d;
}

py::tuple bfs(const ValueSet& vs, const DirectedHypergraph& g,
              const std::vector<std::string>& sources, const std::string& mode) {
  auto v = indicator(vs, g.vertices(), sources);
  auto p = build_incidence(vs, g);
  FrontierVector w;
  if (mode == "strict")
    w = linalg_bfs(vs, v, p);
  else if (mode == "sparse")
    w = linalg_bfs_sparse(vs, AnnihilatorCertificate::issue(vs), v, p);
  else
    throw Error("mode must be strict or sparse");
  return py::make_tuple(bfs_edge_step(vs, v, p.e_out).support(), w.support());
}

std::string report(const ValueSet& vs, const std::string& theorem, std::uint64_t seed) {
  HarnessBounds b;
  b.seed = seed;
  Verifier verifier(b);
  if (theorem == "2.1") return format_report(verifier.theorem_2_1(vs), theorem);
  if (theorem == "conventions") {
    auto r = verifier.conventions(vs);
    return r ? format_report(*r, theorem) : std::string();
  }
  throw Error("theorem must be 2.1 or conventions");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<ValueSet>(m, "ValueSet")
      .def_property_readonly("id", &ValueSet::id)
      .def_property_readonly("is_finite", &ValueSet::is_finite)
      .def_property_readonly("zero", [](const ValueSet& vs) { return vs.name(vs.zero()); })
      .def_property_readonly("one", [](const ValueSet& vs) { return vs.name(vs.one()); })
      .def_property_readonly("elements",
                             [](const ValueSet& vs) {
                               std::vector<std::string> out;
                               for (Value v : vs.elements()) out.push_back(vs.name(v));
                               return out;
                             })
      .def("plus",
           [](const ValueSet& vs, const std::string& a, const std::string& b) {
             return vs.name(vs.plus(vs.element(a), vs.element(b)));
           })
      .def("times",
           [](const ValueSet& vs, const std::string& a, const std::string& b) {
             return vs.name(vs.times(vs.element(a), vs.element(b)));
           })
      .def("profile", &profile_dict)
      .def("to_text", &format_value_set)
      .def("__repr__", [](const ValueSet& vs) { return "<ValueSet " + vs.id() + ">"; });

  py::class_<DirectedHypergraph>(m, "Hypergraph")
      .def_property_readonly("vertices",
                             [](const DirectedHypergraph& g) { return g.vertices().keys(); })
      .def_property_readonly("edges",
                             [](const DirectedHypergraph& g) { return g.edge_keys().keys(); })
      .def("to_text", &format_hypergraph);

  m.def("builtin", [](const std::string& name) { return builtin(name); });
  m.def("builtin_names", &builtin_names);
  m.def("parse_value_set", &parse_value_set, py::arg("text"), py::arg("id"));
  m.def("load_value_set", [](const std::string& path) { return load_value_set_file(path); });
  m.def("parse_hypergraph", &parse_hypergraph);
  m.def("bfs", &bfs, py::arg("value_set"), py::arg("graph"), py::arg("sources"),
        py::arg("mode") = "strict");
  m.def("report", &report, py::arg("value_set"), py::arg("theorem") = "2.1",
        py::arg("seed") = 0);
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "hyperbfs");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

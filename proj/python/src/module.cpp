#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rrat/documents.hpp"
#include "rrat/errors.hpp"
#include "rrat/reproduce.hpp"

namespace py = pybind11;
using namespace rrat;

// Documents cross the boundary as JSON text; the Python package wraps them
// with json.loads / json.dumps.
namespace {

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
}

FieldDescriptor field_of(const std::string& s) {
  json j = parse(s);
  if (j.is_string()) return builtin_field(j.get<std::string>());
  return FieldDescriptor::from_json(j);
}

SubgroupMode mode_of(const std::string& s) {
  if (s == "prime-power") return SubgroupMode::PrimePower;
  if (s == "all") return SubgroupMode::All;
  throw InputError("subgroups must be 'prime-power' or 'all'");
}

GLattice lattice_of(const std::string& s) { return lattice_from_json(parse(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral representations, flabby resolutions and retract rationality verdicts";

  auto input = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  (void)input;

  m.def("catalog_names", &catalog_names);
  m.def("group_info", [](const std::string& g) { return group_info_json(*group_from_json(parse(g))).dump(); });
  m.def("regular_lattice", [](const std::string& g) { return lattice_json(regular_lattice(group_from_json(parse(g)))).dump(); });
  m.def("lenstra_lattice", [](unsigned n) { return lattice_json(lenstra_lattice(n).M).dump(); });
  m.def("cohomology", [](const std::string& l, const std::string& mode) {
    return profile_json(profile(lattice_of(l), mode_of(mode))).dump();
  });
  m.def("resolve", [](const std::string& l) { return resolution_json(flabby_resolution(lattice_of(l))).dump(); });
  m.def("invertible", [](const std::string& l) { return decision_json(is_invertible(lattice_of(l))).dump(); });
  m.def("fingerprint", [](const std::string& l) {
    json out = json::array();
    for (const auto& e : class_fingerprint(lattice_of(l)))
      out.push_back(json{{"subgroup", e.subgroup.members()}, {"h_minus1", invariants_json(e.h_minus1)},
                         {"h1", invariants_json(e.h1)}});
    return out.dump();
  });
  m.def("verdict_noether", [](const std::string& g, const std::string& k) {
    return noether_verdict(group_from_json(parse(g)), field_of(k)).to_json().dump();
  });
  m.def("verdict_torus", [](const std::string& l) { return torus_verdict(lattice_of(l)).to_json().dump(); });
  m.def("verdict_multiplicative", [](const std::string& l, const std::string& k) {
    return multiplicative_verdict(lattice_of(l), field_of(k)).to_json().dump();
  });
  m.def("verdict_monomial_universal",
        [](const std::string& g) { return monomial_universal_verdict(group_from_json(parse(g))).to_json().dump(); });
  m.def("verdict_monomial", [](const std::string& a, const std::string& k) {
    return monomial_instance_verdict(monomial_from_json(parse(a)), field_of(k)).to_json().dump();
  });
  m.def("extension_class", [](const std::string& a) { return extension_json(extension_class(monomial_from_json(parse(a)))).dump(); });
  m.def("replay_noether", [](const std::string& v, const std::string& g, const std::string& k) {
    return replay_noether(Verdict::from_json(parse(v)), group_from_json(parse(g)), field_of(k));
  });
  m.def("smith_normal_form", [](const std::string& a) {
    json j = parse(a);
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    auto s = smith_normal_form(matrix_from_json(j, rows, cols));
    return json{{"U", matrix_json(s.U)}, {"D", matrix_json(s.D)}, {"V", matrix_json(s.V)}}.dump();
  });
  m.def("reproduce_voskresenskii", [](unsigned n) { return reproduce_voskresenskii(n).dump(); });
  m.def("reproduce_endo_miyata", [](std::size_t max_order, std::size_t trials, std::uint64_t seed) {
    return reproduce_endo_miyata(max_order, trials, seed).dump();
  });
}

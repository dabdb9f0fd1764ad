#include "rrat/documents.hpp"

#include <fstream>
#include <sstream>

#include "rrat/errors.hpp"

namespace rrat {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) {
    auto u = j.get<unsigned long>();
    if (u > static_cast<unsigned long>(std::numeric_limits<long>::max())) return Integer(std::to_string(u));
    return Integer(static_cast<long>(u));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.get<std::string>());
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

json matrix_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(integer_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError("matrix must have " + std::to_string(rows) + " rows");
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) a(i, c) = integer_from_json(row[c]);
  }
  return a;
}

json invariants_json(const AbelianInvariants& a) {
  json out = json::array();
  for (const auto& d : a.divisors) out.push_back(integer_json(d));
  for (std::size_t i = 0; i < a.free_rank; ++i) out.push_back("Z");
  return out;
}

json group_json(const FiniteGroup& g) { return json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}}; }

GroupPtr group_from_json(const json& j, std::size_t max_order) {
  try {
    if (j.is_string()) return catalog_group(j.get<std::string>());
    if (!j.is_object()) throw InputError("group document must be a name or an object");
    if (j.contains("catalog")) return catalog_group(j.at("catalog").get<std::string>());
    const std::string name = j.value("name", std::string());
    if (j.contains("table"))
      return FiniteGroup::from_table(j.at("table").get<FiniteGroup::Table>(), name, max_order);
    if (j.contains("permutations"))
      return FiniteGroup::from_permutations(j.at("permutations").get<std::vector<std::vector<std::size_t>>>(),
                                            j.at("degree").get<std::size_t>(), name, max_order);
    throw InputError("group document needs 'catalog', 'table' or 'permutations'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed group document: ") + e.what());
  }
}

json lattice_json(const GLattice& m) {
  json mats = json::array();
  for (const auto& a : m.generator_matrices()) mats.push_back(matrix_json(a));
  return json{{"group", group_json(*m.group())}, {"rank", m.rank()}, {"generators", m.generators()},
              {"matrices", mats}};
}

GLattice lattice_from_json(const json& j, std::size_t max_order) {
  try {
    if (!j.is_object()) throw InputError("lattice document must be an object");
    GroupPtr g = group_from_json(j.at("group"), max_order);
    const std::size_t r = j.at("rank").get<std::size_t>();
    std::vector<Element> gens =
        j.contains("generators") ? j.at("generators").get<std::vector<Element>>() : g->generators();
    const auto& mj = j.at("matrices");
    if (!mj.is_array() || mj.size() != gens.size()) throw InputError("one matrix per generator expected");
    std::vector<IntMatrix> mats;
    for (const auto& a : mj) mats.push_back(matrix_from_json(a, r, r));
    return GLattice(g, r, std::move(gens), std::move(mats));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed lattice document: ") + e.what());
  }
}

json monomial_json(const MonomialAction& a) {
  json j = lattice_json(a.lattice());
  j["d"] = a.d();
  json coeff = json::object();
  const auto& gens = a.lattice().generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    json v = json::array();
    for (const auto& x : a.generator_coefficients()[k]) v.push_back(integer_json(x));
    coeff[std::to_string(gens[k])] = v;
  }
  j["coeff"] = coeff;
  return j;
}

MonomialAction monomial_from_json(const json& j, std::size_t max_order) {
  try {
    GLattice m = lattice_from_json(j, max_order);
    const long d = j.at("d").get<long>();
    const auto& cj = j.at("coeff");
    if (!cj.is_object()) throw InputError("coeff must map generators to vectors");
    std::vector<IntVector> coeff;
    for (Element s : m.generators()) {
      const std::string key = std::to_string(s);
      if (!cj.contains(key)) throw InputError("missing coefficients for generator " + key);
      IntVector v;
      for (const auto& x : cj.at(key)) {
        if (!x.is_number_integer() && !x.is_string())
          throw InputError("coefficients are exponents of a root of unity; general scalars are not supported");
        v.push_back(integer_from_json(x));
      }
      coeff.push_back(std::move(v));
    }
    if (cj.size() != m.generators().size()) throw InputError("coefficients given for a non-generator");
    return MonomialAction(std::move(m), d, std::move(coeff));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed monomial document: ") + e.what());
  }
}

json subgroup_json(const Subgroup& h) {
  return json{{"order", h.order()}, {"members", h.members()}, {"generators", h.generators()}};
}

json profile_json(const CohomologyProfile& p) {
  json entries = json::array();
  for (const auto& e : p.entries) {
    json s = subgroup_json(e.subgroup);
    s["h_minus1"] = invariants_json(e.h_minus1);
    s["h1"] = invariants_json(e.h1);
    entries.push_back(std::move(s));
  }
  std::string summary = p.is_flabby && p.is_coflabby ? "flabby and coflabby"
                        : p.is_coflabby             ? "coflabby, not flabby"
                        : p.is_flabby               ? "flabby, not coflabby"
                                                    : "neither flabby nor coflabby";
  return json{{"entries", entries}, {"flabby", p.is_flabby}, {"coflabby", p.is_coflabby}, {"summary", summary}};
}

json resolution_json(const FlabbyResolution& r) {
  json stabs = json::array();
  for (const auto& h : r.stabilizers) stabs.push_back(h.members());
  return json{{"M", lattice_json(r.M)},
              {"P", lattice_json(r.P)},
              {"F", lattice_json(r.F)},
              {"stabilizers", stabs},
              {"injection", matrix_json(r.injection.matrix)},
              {"surjection", matrix_json(r.surjection.matrix)}};
}

json decision_json(const InvertibilityDecision& d) {
  json stabs = json::array();
  for (const auto& s : d.cover.summands) stabs.push_back(s.stabilizer.members());
  json j{{"invertible", d.invertible}, {"cover_rank", d.cover.P.rank()}, {"cover_stabilizers", stabs}};
  j["witness"] = d.witness ? matrix_json(d.witness->matrix) : json(nullptr);
  return j;
}

json extension_json(const ExtensionClass& e) {
  json cocycle = json::array();
  for (const auto& c : e.cocycle) {
    json v = json::array();
    for (const auto& x : c) v.push_back(integer_json(x));
    cocycle.push_back(v);
  }
  auto vec = [](const std::optional<IntVector>& w) {
    if (!w) return json(nullptr);
    json v = json::array();
    for (const auto& x : *w) v.push_back(integer_json(x));
    return v;
  };
  return json{{"d", e.action.d()},
              {"purely_monomial", e.action.is_purely_monomial()},
              {"cocycle", cocycle},
              {"vanishes_at_d", e.vanishes_at_d},
              {"vanishes_stably", e.vanishes_stably},
              {"witness", vec(e.witness)},
              {"stable_witness", vec(e.stable_witness)}};
}

json group_info_json(const FiniteGroup& g) {
  json j{{"name", g.name()},       {"order", g.order()},        {"abelian", g.is_abelian()},
         {"cyclic", g.is_cyclic()}, {"exponent", g.exponent()}, {"generators", g.generators()},
         {"all_sylow_cyclic", all_sylow_cyclic(g)}};
  if (auto z = zgroup_presentation(g))
    j["zgroup"] = json{{"m", z->m}, {"n", z->n}, {"r", z->r}, {"sigma", z->sigma}, {"tau", z->tau}};
  if (g.is_abelian()) j["abelian_decomposition"] = abelian_decomposition(g);
  if (g.order() <= kDefaultMaxSubgroupOrder) {
    const auto& subs = g.subgroups();
    std::size_t normal = 0;
    for (const auto& h : subs) normal += h.is_normal();
    j["subgroups"] = subs.size();
    j["normal_subgroups"] = normal;
    j["subgroup_classes"] = g.subgroup_class_representatives().size();
    if (auto w = abelian_normal_cyclic_quotient(g))
      j["abelian_normal_cyclic_quotient"] =
          json{{"H", w->h.members()}, {"tau", w->tau}, {"e_prime", w->e_prime}};
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace rrat

#pragma once

// JSON documents for every value the CLI reads or writes.

#include "json.hpp"
#include "rrat/cohomology.hpp"
#include "rrat/fields.hpp"
#include "rrat/monomial.hpp"
#include "rrat/resolutions.hpp"
#include "rrat/verdict.hpp"

namespace rrat {

using nlohmann::json;

// Integers are written as numbers when they fit in 64 bits, else as strings.
json integer_json(const Integer& x);
Integer integer_from_json(const json& j);
json matrix_json(const IntMatrix& a);  // list of rows
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json invariants_json(const AbelianInvariants& a);  // [d1, ..., dk] plus "Z" per free rank

// A group document is a catalog name (string or {"catalog": name}), a
// multiplication table {"table": [[...]]}, or {"permutations": [...], "degree": n}.
// Written groups always use the table form.
json group_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j, std::size_t max_order = kDefaultMaxOrder);

// {"group": ..., "rank": r, "generators": [element indices], "matrices": [...]}
json lattice_json(const GLattice& m);
GLattice lattice_from_json(const json& j, std::size_t max_order = kDefaultMaxOrder);

// Lattice document plus {"d": d, "coeff": {"<generator>": [...]}}
json monomial_json(const MonomialAction& a);
MonomialAction monomial_from_json(const json& j, std::size_t max_order = kDefaultMaxOrder);

json subgroup_json(const Subgroup& h);
json profile_json(const CohomologyProfile& p);
json resolution_json(const FlabbyResolution& r);
json decision_json(const InvertibilityDecision& d);
json extension_json(const ExtensionClass& e);
json group_info_json(const FiniteGroup& g);

// Reads a file and parses it; InputError on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace rrat

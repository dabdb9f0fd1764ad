#pragma once

// Reproduction suites run by the CLI and the acceptance binary.

#include <cstdint>

#include "json.hpp"

namespace rrat {

// Lenstra lattice I_q, q = 2^n (2 <= n <= 6): profile over all subgroups,
// flabby resolution, invertibility of [I_q]^fl and the torus verdict,
// compared against the expected values. "passed" summarizes the checks.
nlohmann::json reproduce_voskresenskii(unsigned n);

// Catalog groups of order <= max_order whose Sylow subgroups are all cyclic:
// `trials` seeded random lattices each, [M]^fl must be invertible.
nlohmann::json reproduce_endo_miyata(std::size_t max_order, std::size_t trials, std::uint64_t seed);

}  // namespace rrat

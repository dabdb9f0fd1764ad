#pragma once

// Seeded random G-lattices for property tests and the reproduction suites.

#include <cstdint>
#include <random>

#include "rrat/lattices.hpp"

namespace rrat {

using Rng = std::mt19937_64;

// Uniform in [0, n); rng() % n keeps runs identical across standard libraries.
std::size_t pick(Rng& rng, std::size_t n);

// Z[G/H] blocks with total rank <= max_rank (at least one block, which may
// exceed the bound when every index does), conjugated by a random unimodular
// change of basis.
GLattice random_permutation_lattice(const GroupPtr& g, Rng& rng, std::size_t max_rank = 16);

// Sums of Z, Z[G/H], sign lattices, augmentation kernels of Z[G/H] and their
// duals with rank <= max_rank; sometimes replaced by the full-rank G-stable
// sublattice span(G v) + m M; then a random change of basis.
GLattice random_lattice(const GroupPtr& g, Rng& rng, std::size_t max_rank = 5);

// A' = U^-1 A U for a random unimodular U built from elementary operations.
GLattice random_change_of_basis(const GLattice& m, Rng& rng);

// Kernel of Z[G/H] -> Z in the basis e_i - e_0.
GLattice augmentation_kernel(const Subgroup& h);

}  // namespace rrat

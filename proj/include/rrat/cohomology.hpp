#pragma once

// Tate cohomology of G-lattices in degrees -1, 0 and 1.

#include <vector>

#include "rrat/lattices.hpp"

namespace rrat {

// Ker(N_H) / I_H M
AbelianInvariants tate_minus1(const Subgroup& h, const GLattice& m);
// M^H / N_H M
AbelianInvariants tate_zero(const Subgroup& h, const GLattice& m);
// crossed homomorphisms modulo principal ones
AbelianInvariants h1(const Subgroup& h, const GLattice& m);

enum class SubgroupMode { PrimePower, All };

struct ProfileEntry {
  Subgroup subgroup;
  AbelianInvariants h_minus1;
  AbelianInvariants h1;
};

struct CohomologyProfile {
  std::vector<ProfileEntry> entries;
  bool is_flabby = true;
  bool is_coflabby = true;
};

// Prime-power mode is enough for both flags: restriction to a Sylow subgroup
// is injective on the p-part of Tate cohomology.
CohomologyProfile profile(const GLattice& m, SubgroupMode mode = SubgroupMode::PrimePower);

bool is_flabby(const GLattice& m, SubgroupMode mode = SubgroupMode::PrimePower);
bool is_coflabby(const GLattice& m, SubgroupMode mode = SubgroupMode::PrimePower);

}  // namespace rrat

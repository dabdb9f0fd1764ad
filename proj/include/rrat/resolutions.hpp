#pragma once

// Permutation covers, flabby resolutions and the invertibility decision.

#include <optional>
#include <vector>

#include "rrat/cohomology.hpp"
#include "rrat/lattices.hpp"

namespace rrat {

inline constexpr std::size_t kMaxCoverRank = 512;

// One summand Z[G/H] of a cover, the trivial coset mapping to `image`.
struct CoverSummand {
  Subgroup stabilizer;
  IntVector image;
};

struct FixedPointCover {
  GLattice M;
  GLattice P;
  std::vector<CoverSummand> summands;
  LatticeMap projection;  // P -> M
  GLattice C;
  LatticeMap inclusion;   // C -> P
};

// P^H -> M^H is onto for every subgroup H (checked), so C is coflabby (checked).
FixedPointCover fixed_point_cover(const GLattice& m, std::size_t max_rank = kMaxCoverRank);

struct FlabbyResolution {
  GLattice M, P, F;
  std::vector<Subgroup> stabilizers;  // P = sum of Z[G/H] over these
  LatticeMap injection;               // M -> P
  LatticeMap surjection;              // P -> F
};

// Dual of the cover of the dual. Exactness and flabbiness of F are verified;
// a failure raises InternalError.
FlabbyResolution flabby_resolution(const GLattice& m, std::size_t max_rank = kMaxCoverRank);

struct InvertibilityDecision {
  bool invertible = false;
  std::optional<LatticeMap> witness;  // equivariant section M -> P of the cover
  FixedPointCover cover;
};

// M is invertible iff the cover P -> M splits equivariantly.
InvertibilityDecision is_invertible(const GLattice& m, std::size_t max_rank = kMaxCoverRank);

// Exact re-check of a witness: equivariance and projection * s = identity.
bool verify_section(const FixedPointCover& cover, const IntMatrix& s);

struct FingerprintEntry {
  Subgroup subgroup;
  AbelianInvariants h_minus1;
  AbelianInvariants h1;
  friend bool operator==(const FingerprintEntry& a, const FingerprintEntry& b) {
    return a.subgroup == b.subgroup && a.h_minus1 == b.h_minus1 && a.h1 == b.h1;
  }
};

// Tate groups of F over all subgroups in the degrees where permutation
// lattices contribute nothing; equal flabby classes give equal tables.
std::vector<FingerprintEntry> class_fingerprint(const GLattice& m);

}  // namespace rrat

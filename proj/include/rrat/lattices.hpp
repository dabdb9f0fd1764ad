#pragma once

// G-lattices: integral representations with the column convention
// g.x_j = sum_i a_ij x_i and A(gh) = A(g) A(h).

#include <memory>
#include <vector>

#include "rrat/groups.hpp"
#include "rrat/zlinalg.hpp"

namespace rrat {

class GLattice {
 public:
  GLattice() = default;

  // Action given on elements that generate G. With verify set, every matrix
  // must be unimodular and the expansion must respect every Cayley-graph edge,
  // which is the homomorphism property on all pairs. InputError otherwise.
  GLattice(GroupPtr group, std::size_t rank, std::vector<Element> generators,
           std::vector<IntMatrix> matrices, bool verify = true);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  const std::vector<IntMatrix>& generator_matrices() const noexcept { return mats_; }

  // A(g), expanded on first use and shared between copies.
  const IntMatrix& action(Element g) const;
  const std::vector<IntMatrix>& all_actions() const;

  // Re-runs the full validation (for lattices built without it).
  void verify() const;

 private:
  struct Cache;
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<Element> gens_;
  std::vector<IntMatrix> mats_;
  std::shared_ptr<Cache> cache_;
};

// matrix : source -> target, columns indexed by the source basis.
struct LatticeMap {
  GLattice source, target;
  IntMatrix matrix;

  bool is_equivariant() const;
};

GLattice trivial_lattice(const GroupPtr& g, std::size_t rank = 1);

// Action of G on the left cosets xH, ordered by smallest member; the coset of
// the identity comes first.
struct CosetSpace {
  std::vector<Element> representatives;  // smallest member of each coset
  std::vector<std::size_t> coset_of;     // element -> coset index
};
CosetSpace left_cosets(const Subgroup& h);

// Direct sum of the coset lattices Z[G/H_i] in the given order.
GLattice permutation_lattice(const GroupPtr& g, const std::vector<Subgroup>& stabilizers);
GLattice regular_lattice(const GroupPtr& g);

// Rank one, g acting by +1 on H and by -1 off H; H of index 2.
GLattice sign_lattice(const Subgroup& h);

// Kernel of the augmentation Z[G] -> Z, in the basis e_g - e_1 (g != 1).
GLattice augmentation_ideal(const GroupPtr& g);

GLattice dual(const GLattice& m);
GLattice direct_sum(const GLattice& m, const GLattice& n);

// The same matrices over H viewed as a standalone group.
GLattice restrict(const GLattice& m, const Subgroup& h);

// Lattice for G/K built from one whose action kernel contains K.
GLattice descend(const GLattice& m, const Quotient& q);

Subgroup action_kernel(const GLattice& m);
bool is_faithful(const GLattice& m);

// Restrict the action to the sublattice spanned by the columns of `basis`,
// which must be G-stable and of full column rank.
GLattice sublattice(const GLattice& m, const IntMatrix& basis);

struct LenstraData {
  std::size_t q = 0;
  GroupPtr pi;
  GLattice N;                 // basis e_i, i = 1..q-1
  std::vector<std::size_t> phi;  // phi[i-1] = i
  GLattice M;                 // kernel of phi, in Hermite basis
  LatticeMap inclusion;       // M -> N
};
LenstraData lenstra_lattice(unsigned n);

}  // namespace rrat

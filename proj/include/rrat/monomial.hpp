#pragma once

// Monomial actions sigma.x_j = zeta_d^{c_j(sigma)} prod_i x_i^{a_ij(sigma)} with
// root-of-unity coefficients stored as exponents mod d.

#include <optional>
#include <vector>

#include "rrat/lattices.hpp"

namespace rrat {

class MonomialAction {
 public:
  MonomialAction() = default;

  // coeff[k] belongs to lattice.generators()[k]; entries are reduced mod d.
  // InputError when the data does not define an action of the group.
  MonomialAction(GLattice lattice, long d, std::vector<IntVector> coeff);

  const GLattice& lattice() const noexcept { return lattice_; }
  long d() const noexcept { return d_; }
  const std::vector<IntVector>& generator_coefficients() const noexcept { return coeff_; }

  // Row vector c(g) mod d, with c(gh) = c(g) A(h) + c(h).
  const IntVector& coefficients(Element g) const { return all_[g]; }
  bool is_purely_monomial() const;

  // Elements acting trivially on M_alpha: A(g) = 1 and c(g) = 0.
  Subgroup kernel() const;
  bool is_faithful() const;

 private:
  GLattice lattice_;
  long d_ = 1;
  std::vector<IntVector> coeff_;
  std::vector<IntVector> all_;
};

// New variables y_j = zeta_d^{v_j} x_j; coefficients become c + v - vA.
MonomialAction rescale(const MonomialAction& a, const IntVector& v);

// Same action with coefficients pushed into Z/(d*m) along zeta_d = zeta_{dm}^m.
MonomialAction enlarge(const MonomialAction& a, long m);

struct ExtensionClass {
  MonomialAction action;
  // gamma(g) = A(g^-1)^T c(g)^T in Hom(M, Z/d), one column per element;
  // a 1-cocycle for the contragredient action.
  std::vector<IntVector> cocycle;
  bool vanishes_at_d = false;
  bool vanishes_stably = false;
  std::optional<IntVector> witness;         // v mod d with rescale(action, v) purely monomial
  std::optional<IntVector> stable_witness;  // the same over Z/(d|G|)
};

ExtensionClass extension_class(const MonomialAction& a);

// Checks gamma(gh) = gamma(g) + g.gamma(h) mod d on all pairs.
bool verify_cocycle(const ExtensionClass& e);

}  // namespace rrat

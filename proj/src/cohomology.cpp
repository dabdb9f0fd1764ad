#include "rrat/cohomology.hpp"

#include "rrat/errors.hpp"

namespace rrat {

// Every group below is the torsion of one cokernel. The relevant numerator
// (Ker N_H, the cocycles, M^H) is saturated in its ambient lattice and has the
// same rank as the denominator, so the quotient is exactly that torsion.

namespace {

void check_same_group(const Subgroup& h, const GLattice& m) {
  if (!h.parent() || !(h.parent() == m.group() || *h.parent() == *m.group()))
    throw InputError("subgroup does not belong to the lattice's group");
}

IntMatrix minus_identity(const IntMatrix& a) { return a - IntMatrix::identity(a.rows()); }

}  // namespace

AbelianInvariants tate_minus1(const Subgroup& h, const GLattice& m) {
  check_same_group(h, m);
  const auto gens = h.generators();
  const std::size_t r = m.rank();
  IntMatrix span(r, gens.size() * r);
  for (std::size_t k = 0; k < gens.size(); ++k) span.set_block(0, k * r, minus_identity(m.action(gens[k])));
  return cokernel_torsion(span);
}

AbelianInvariants tate_zero(const Subgroup& h, const GLattice& m) {
  check_same_group(h, m);
  IntMatrix norm(m.rank(), m.rank());
  for (Element x : h.members()) norm += m.action(x);
  return cokernel_torsion(norm);
}

AbelianInvariants h1(const Subgroup& h, const GLattice& m) {
  check_same_group(h, m);
  const auto gens = h.generators();
  const std::size_t r = m.rank();
  // a cocycle is determined by its values on generators; coboundaries are
  // m -> ((g_k - 1) m)_k
  IntMatrix cob(gens.size() * r, r);
  for (std::size_t k = 0; k < gens.size(); ++k) cob.set_block(k * r, 0, minus_identity(m.action(gens[k])));
  auto inv = cokernel_invariants(cob, gens.size() * r);
  inv.free_rank = 0;
  return inv;
}

namespace {

std::vector<Subgroup> selected(const GLattice& m, SubgroupMode mode) {
  const auto& g = *m.group();
  if (mode == SubgroupMode::All) return g.subgroups();
  return g.prime_power_subgroups();
}

}  // namespace

CohomologyProfile profile(const GLattice& m, SubgroupMode mode) {
  CohomologyProfile p;
  for (const auto& h : selected(m, mode)) {
    ProfileEntry e{h, tate_minus1(h, m), h1(h, m)};
    p.is_flabby = p.is_flabby && e.h_minus1.is_trivial();
    p.is_coflabby = p.is_coflabby && e.h1.is_trivial();
    p.entries.push_back(std::move(e));
  }
  return p;
}

bool is_flabby(const GLattice& m, SubgroupMode mode) {
  for (const auto& h : selected(m, mode))
    if (!tate_minus1(h, m).is_trivial()) return false;
  return true;
}

bool is_coflabby(const GLattice& m, SubgroupMode mode) {
  for (const auto& h : selected(m, mode))
    if (!h1(h, m).is_trivial()) return false;
  return true;
}

}  // namespace rrat

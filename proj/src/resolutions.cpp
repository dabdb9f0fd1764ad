#include "rrat/resolutions.hpp"

#include <algorithm>
#include <map>

#include "rrat/errors.hpp"

namespace rrat {

namespace {

// Columns: Hermite basis of {x : A(g) x = x for g in gens}.
IntMatrix fixed_basis(const GLattice& m, const std::vector<Element>& gens) {
  const std::size_t r = m.rank();
  if (gens.empty()) return IntMatrix::identity(r);
  IntMatrix stacked(gens.size() * r, r);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.set_block(k * r, 0, m.action(gens[k]) - IntMatrix::identity(r));
  return kernel_basis(stacked);
}

// Rows: basis of the functionals fixed by the elements in gens.
IntMatrix fixed_functionals(const GLattice& m, const std::vector<Element>& gens) {
  const std::size_t r = m.rank();
  if (gens.empty()) return IntMatrix::identity(r);
  IntMatrix stacked(gens.size() * r, r);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.set_block(k * r, 0, m.action(gens[k]).transpose() - IntMatrix::identity(r));
  return kernel_basis(stacked).transpose();
}

struct SummandData {
  CosetSpace cosets;
  std::vector<IntVector> images;  // A(x_c) f per coset
};

SummandData summand_data(const GLattice& m, const CoverSummand& s) {
  SummandData d{left_cosets(s.stabilizer), {}};
  for (Element x : d.cosets.representatives) d.images.push_back(m.action(x) * s.image);
  return d;
}

// Images in M of the H-orbit sums of the coset basis: they span the image of
// (Z[G/K])^H.
void add_fixed_images(SublatticeBuilder& b, const FiniteGroup& g, const Subgroup& h, const SummandData& d,
                      std::size_t rank) {
  const std::size_t n = d.cosets.representatives.size();
  std::vector<bool> seen(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    if (seen[c]) continue;
    IntVector sum(rank);
    std::vector<std::size_t> orbit{c};
    seen[c] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const auto& img = d.images[orbit[i]];
      for (std::size_t k = 0; k < rank; ++k) sum[k] += img[k];
      for (Element y : h.members()) {
        std::size_t c2 = d.cosets.coset_of[g.mul(y, d.cosets.representatives[orbit[i]])];
        if (!seen[c2]) {
          seen[c2] = true;
          orbit.push_back(c2);
        }
      }
    }
    b.add(sum);
  }
}

}  // namespace

FixedPointCover fixed_point_cover(const GLattice& m, std::size_t max_rank) {
  const auto& g = *m.group();
  const std::size_t r = m.rank();
  auto reps = g.subgroup_class_representatives();
  std::stable_sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });

  std::vector<CoverSummand> summands;
  std::vector<SummandData> data;
  std::size_t rank_p = 0;
  for (const auto& h : reps) {
    SublatticeBuilder b(r);
    for (const auto& d : data) add_fixed_images(b, g, h, d, r);
    IntMatrix basis = fixed_basis(m, h.generators());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      IntVector f = basis.column(j);
      if (b.contains(f)) continue;
      rank_p += g.order() / h.order();
      if (rank_p > max_rank)
        throw ResourceError("permutation cover rank exceeds bound " + std::to_string(max_rank));
      summands.push_back({h, f});
      data.push_back(summand_data(m, summands.back()));
      add_fixed_images(b, g, h, data.back(), r);
    }
  }

  // independent re-check of the fixed-point property
  for (const auto& h : reps) {
    SublatticeBuilder b(r);
    for (const auto& d : data) add_fixed_images(b, g, h, d, r);
    IntMatrix basis = fixed_basis(m, h.generators());
    for (std::size_t j = 0; j < basis.cols(); ++j)
      if (!b.contains(basis.column(j))) throw InternalError("cover misses fixed points");
  }

  std::vector<Subgroup> stabs;
  std::vector<IntVector> cols;
  for (std::size_t a = 0; a < summands.size(); ++a) {
    stabs.push_back(summands[a].stabilizer);
    for (const auto& img : data[a].images) cols.push_back(img);
  }
  FixedPointCover cover;
  cover.M = m;
  cover.P = permutation_lattice(m.group(), stabs);
  cover.summands = std::move(summands);
  IntMatrix pi = IntMatrix::from_columns(cols, r);
  cover.projection = LatticeMap{cover.P, m, pi};
  if (!cokernel_invariants(pi, r).is_trivial()) throw InternalError("cover projection is not onto");
  if (!cover.projection.is_equivariant()) throw InternalError("cover projection is not equivariant");
  IntMatrix iota = kernel_basis(pi);
  cover.C = sublattice(cover.P, iota);
  cover.inclusion = LatticeMap{cover.C, cover.P, iota};
  if (!is_coflabby(cover.C)) throw InternalError("kernel of the cover is not coflabby");
  return cover;
}

FlabbyResolution flabby_resolution(const GLattice& m, std::size_t max_rank) {
  auto cover = fixed_point_cover(dual(m), max_rank);
  FlabbyResolution res;
  res.M = m;
  res.P = cover.P;  // permutation matrices are orthogonal, so P is its own dual
  for (const auto& s : cover.summands) res.stabilizers.push_back(s.stabilizer);
  res.F = dual(cover.C);
  res.injection = LatticeMap{m, res.P, cover.projection.matrix.transpose()};
  res.surjection = LatticeMap{res.P, res.F, cover.inclusion.matrix.transpose()};

  const auto& inj = res.injection.matrix;
  const auto& sur = res.surjection.matrix;
  if (!res.injection.is_equivariant() || !res.surjection.is_equivariant())
    throw InternalError("resolution maps are not equivariant");
  if (m.rank() + res.F.rank() != res.P.rank()) throw InternalError("resolution ranks do not add up");
  if (rank(inj) != m.rank()) throw InternalError("resolution injection has a kernel");
  if (!(sur * inj).is_zero()) throw InternalError("resolution composition is not zero");
  if (!cokernel_invariants(inj, res.P.rank()).divisors.empty())
    throw InternalError("image of the injection is not saturated");
  if (!cokernel_invariants(sur, res.F.rank()).is_trivial()) throw InternalError("resolution surjection is not onto");
  if (!is_flabby(res.F)) throw InternalError("F is not flabby");
  return res;
}

bool verify_section(const FixedPointCover& cover, const IntMatrix& s) {
  const auto& m = cover.M;
  if (s.rows() != cover.P.rank() || s.cols() != m.rank()) return false;
  if (!(cover.projection.matrix * s).is_identity()) return false;
  for (Element g : m.generators())
    if (s * m.action(g) != cover.P.action(g) * s) return false;
  return true;
}

InvertibilityDecision is_invertible(const GLattice& m, std::size_t max_rank) {
  InvertibilityDecision dec;
  dec.cover = fixed_point_cover(m, max_rank);
  const auto& cover = dec.cover;
  const auto& g = *m.group();
  const std::size_t r = m.rank();
  if (r == 0) {
    dec.invertible = true;
    dec.witness = LatticeMap{m, cover.P, IntMatrix(cover.P.rank(), 0)};
    return dec;
  }

  // Z[G]-module generators of M among the standard basis vectors
  std::vector<std::size_t> module_gens;
  {
    SublatticeBuilder b(r);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r);
      e[i] = 1;
      if (b.contains(e)) continue;
      module_gens.push_back(i);
      for (Element x = 0; x < g.order(); ++x) b.add(m.action(x).column(i));
    }
  }

  // Hom_G(M, Z[G/K]) = K-fixed functionals phi, via s(m) = sum_c phi(x_c^-1 m) e_c.
  // w[a][b][c] = phi_b A(x_c^-1) for summand a.
  std::map<std::vector<Element>, IntMatrix> functionals;
  struct Block {
    std::vector<IntVector> u;               // A(x_c) f
    std::vector<std::vector<IntVector>> w;  // [b][c]
  };
  std::vector<Block> blocks;
  std::size_t unknowns = 0;
  for (const auto& s : cover.summands) {
    auto key = s.stabilizer.members();
    auto it = functionals.find(key);
    if (it == functionals.end()) it = functionals.emplace(key, fixed_functionals(m, s.stabilizer.generators())).first;
    const IntMatrix& phi = it->second;
    auto cs = left_cosets(s.stabilizer);
    Block blk;
    for (Element x : cs.representatives) blk.u.push_back(m.action(x) * s.image);
    for (std::size_t b = 0; b < phi.rows(); ++b) {
      std::vector<IntVector> wc;
      for (Element x : cs.representatives) {
        const IntMatrix& ainv = m.action(g.inv(x));
        IntVector row(r);
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k)
            if (sgn(phi(b, k)) != 0 && sgn(ainv(k, j)) != 0) row[j] += phi(b, k) * ainv(k, j);
        wc.push_back(std::move(row));
      }
      blk.w.push_back(std::move(wc));
    }
    unknowns += phi.rows();
    blocks.push_back(std::move(blk));
  }

  // projection(s(e_i)) = e_i for every module generator e_i
  IntMatrix sys(module_gens.size() * r, unknowns);
  IntVector rhs(module_gens.size() * r);
  for (std::size_t t = 0; t < module_gens.size(); ++t) {
    const std::size_t i = module_gens[t];
    rhs[t * r + i] = 1;
    std::size_t col = 0;
    for (const auto& blk : blocks)
      for (const auto& wc : blk.w) {
        for (std::size_t c = 0; c < wc.size(); ++c) {
          const Integer& coef = wc[c][i];
          if (sgn(coef) == 0) continue;
          for (std::size_t k = 0; k < r; ++k)
            if (sgn(blk.u[c][k]) != 0) sys(t * r + k, col) += coef * blk.u[c][k];
        }
        ++col;
      }
  }

  auto y = solve_integer(sys, rhs);
  if (!y) return dec;

  IntMatrix s(cover.P.rank(), r);
  std::size_t row0 = 0, col = 0;
  for (const auto& blk : blocks) {
    const std::size_t ncos = blk.u.size();
    for (const auto& wc : blk.w) {
      const Integer& coef = (*y)[col++];
      if (sgn(coef) != 0)
        for (std::size_t c = 0; c < ncos; ++c)
          for (std::size_t j = 0; j < r; ++j) s(row0 + c, j) += coef * wc[c][j];
    }
    row0 += ncos;
  }
  if (!verify_section(cover, s)) throw InternalError("invertibility witness failed verification");
  dec.invertible = true;
  dec.witness = LatticeMap{m, cover.P, std::move(s)};
  return dec;
}

std::vector<FingerprintEntry> class_fingerprint(const GLattice& m) {
  auto f = flabby_resolution(m).F;
  std::vector<FingerprintEntry> table;
  for (const auto& h : m.group()->subgroups()) table.push_back({h, tate_minus1(h, f), h1(h, f)});
  return table;
}

}  // namespace rrat

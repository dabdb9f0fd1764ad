#include "rrat/random.hpp"

#include <algorithm>

#include "rrat/errors.hpp"

namespace rrat {

std::size_t pick(Rng& rng, std::size_t n) {
  if (n == 0) throw InternalError("pick from an empty range");
  return static_cast<std::size_t>(rng() % n);
}

GLattice augmentation_kernel(const Subgroup& h) {
  auto p = permutation_lattice(h.parent(), {h});
  const std::size_t n = p.rank();
  IntMatrix basis(n, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    basis(i, i - 1) = 1;
    basis(0, i - 1) = -1;
  }
  return sublattice(p, basis);
}

GLattice random_change_of_basis(const GLattice& m, Rng& rng) {
  const std::size_t r = m.rank();
  if (r == 0) return m;
  IntMatrix u = IntMatrix::identity(r), uinv = IntMatrix::identity(r);
  const std::size_t steps = 2 * r + pick(rng, 2 * r + 1);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = pick(rng, r), j = pick(rng, r);
    switch (pick(rng, 3)) {
      case 0: {  // column i += c * column j, applied on the right of u
        if (i == j) break;
        long c = static_cast<long>(pick(rng, 5)) - 2;
        for (std::size_t k = 0; k < r; ++k) u(k, i) += c * u(k, j);
        for (std::size_t k = 0; k < r; ++k) uinv(j, k) -= c * uinv(i, k);
        break;
      }
      case 1:  // swap
        for (std::size_t k = 0; k < r; ++k) {
          std::swap(u(k, i), u(k, j));
          std::swap(uinv(i, k), uinv(j, k));
        }
        break;
      default:  // negate
        for (std::size_t k = 0; k < r; ++k) {
          u(k, i) = -u(k, i);
          uinv(i, k) = -uinv(i, k);
        }
    }
  }
  if (!(u * uinv).is_identity()) throw InternalError("change of basis lost its inverse");
  std::vector<IntMatrix> mats;
  for (Element s : m.generators()) mats.push_back(uinv * m.action(s) * u);
  return GLattice(m.group(), r, m.generators(), std::move(mats), false);
}

GLattice random_permutation_lattice(const GroupPtr& g, Rng& rng, std::size_t max_rank) {
  const auto& subs = g->subgroups();
  std::vector<Subgroup> stabs;
  std::size_t rank = 0;
  const std::size_t blocks = 1 + pick(rng, 3);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto& h = subs[pick(rng, subs.size())];
    const std::size_t idx = g->order() / h.order();
    if (!stabs.empty() && rank + idx > max_rank) continue;
    stabs.push_back(h);
    rank += idx;
  }
  return random_change_of_basis(permutation_lattice(g, stabs), rng);
}

GLattice random_lattice(const GroupPtr& g, Rng& rng, std::size_t max_rank) {
  const auto& subs = g->subgroups();
  std::optional<GLattice> acc;
  const std::size_t target = 1 + pick(rng, max_rank);
  std::size_t rank = 0;
  for (std::size_t attempt = 0; attempt < 16 && rank < target; ++attempt) {
    const std::size_t room = target - rank;
    std::optional<GLattice> block;
    const auto& h = subs[pick(rng, subs.size())];
    const std::size_t idx = g->order() / h.order();
    switch (pick(rng, 5)) {
      case 0:
        block = trivial_lattice(g);
        break;
      case 1:
        if (idx <= room) block = permutation_lattice(g, {h});
        break;
      case 2:
        if (idx == 2) block = sign_lattice(h);
        break;
      case 3:
        if (idx >= 2 && idx - 1 <= room) block = augmentation_kernel(h);
        break;
      default:
        if (idx >= 2 && idx - 1 <= room) block = dual(augmentation_kernel(h));
    }
    if (!block) continue;
    rank += block->rank();
    acc = acc ? direct_sum(*acc, *block) : *block;
  }
  if (!acc) acc = trivial_lattice(g);
  GLattice m = *acc;

  if (pick(rng, 3) == 0) {
    const std::size_t r = m.rank();
    IntVector v(r);
    for (auto& x : v) x = static_cast<long>(pick(rng, 5)) - 2;
    const long scale = 2 + static_cast<long>(pick(rng, 2));
    std::vector<IntVector> cols;
    for (Element x = 0; x < g->order(); ++x) cols.push_back(m.action(x) * v);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r);
      e[i] = scale;
      cols.push_back(std::move(e));
    }
    m = sublattice(m, column_hnf(IntMatrix::from_columns(cols, r)));
  }
  return random_change_of_basis(m, rng);
}

}  // namespace rrat

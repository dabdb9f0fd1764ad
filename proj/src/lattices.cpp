#include "rrat/lattices.hpp"

#include <algorithm>
#include <mutex>

#include "rrat/errors.hpp"

namespace rrat {

struct GLattice::Cache {
  std::once_flag once;
  std::vector<IntMatrix> all;
};

GLattice::GLattice(GroupPtr group, std::size_t rank, std::vector<Element> generators,
                   std::vector<IntMatrix> matrices, bool verify)
    : group_(std::move(group)),
      rank_(rank),
      gens_(std::move(generators)),
      mats_(std::move(matrices)),
      cache_(std::make_shared<Cache>()) {
  if (!group_) throw InputError("lattice without a group");
  if (gens_.size() != mats_.size()) throw InputError("one matrix per generator expected");
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k] >= group_->order()) throw InputError("generator index out of range");
    if (mats_[k].rows() != rank_ || mats_[k].cols() != rank_)
      throw InputError("action matrix has the wrong size");
  }
  if (verify) this->verify();
}

const std::vector<IntMatrix>& GLattice::all_actions() const {
  std::call_once(cache_->once, [this] {
    const auto& g = *group_;
    std::vector<IntMatrix> a(g.order());
    std::vector<bool> set(g.order(), false);
    a[0] = IntMatrix::identity(rank_);
    set[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element x = queue[i];
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        Element y = g.mul(x, gens_[k]);
        if (set[y]) continue;
        a[y] = a[x] * mats_[k];
        set[y] = true;
        queue.push_back(y);
      }
    }
    if (queue.size() != g.order()) {
      // leave the cache usable for the error path below
      for (Element x = 0; x < g.order(); ++x)
        if (!set[x]) a[x] = IntMatrix(rank_, rank_);
    }
    cache_->all = std::move(a);
  });
  return cache_->all;
}

const IntMatrix& GLattice::action(Element g) const { return all_actions()[g]; }

void GLattice::verify() const {
  const auto& g = *group_;
  if (g.closure(gens_).size() != g.order()) throw InputError("action generators do not generate the group");
  for (const auto& m : mats_)
    if (!is_unimodular(m)) throw InputError("action matrix is not unimodular");
  const auto& a = all_actions();
  for (Element x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (a[g.mul(x, gens_[k])] != a[x] * mats_[k]) throw InputError("matrices do not define a group action");
}

bool LatticeMap::is_equivariant() const {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank()) return false;
  for (Element g : source.generators())
    if (matrix * source.action(g) != target.action(g) * matrix) return false;
  return true;
}

GLattice trivial_lattice(const GroupPtr& g, std::size_t rank) {
  const auto& gens = g->generators();
  return GLattice(g, rank, gens, std::vector<IntMatrix>(gens.size(), IntMatrix::identity(rank)), false);
}

CosetSpace left_cosets(const Subgroup& h) {
  const auto& g = *h.parent();
  CosetSpace cs;
  cs.coset_of.assign(g.order(), g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (cs.coset_of[x] != g.order()) continue;
    for (Element y : h.members()) cs.coset_of[g.mul(x, y)] = cs.representatives.size();
    cs.representatives.push_back(x);
  }
  return cs;
}

GLattice permutation_lattice(const GroupPtr& g, const std::vector<Subgroup>& stabilizers) {
  std::vector<CosetSpace> spaces;
  std::size_t rank = 0;
  for (const auto& h : stabilizers) {
    if (!h.parent() || !(*h.parent() == *g)) throw InputError("stabilizer is not a subgroup of the group");
    spaces.push_back(left_cosets(h));
    rank += spaces.back().representatives.size();
  }
  std::vector<IntMatrix> mats;
  for (Element s : g->generators()) {
    IntMatrix a(rank, rank);
    std::size_t off = 0;
    for (const auto& cs : spaces) {
      for (std::size_t j = 0; j < cs.representatives.size(); ++j)
        a(off + cs.coset_of[g->mul(s, cs.representatives[j])], off + j) = 1;
      off += cs.representatives.size();
    }
    mats.push_back(std::move(a));
  }
  return GLattice(g, rank, g->generators(), std::move(mats), false);
}

GLattice regular_lattice(const GroupPtr& g) { return permutation_lattice(g, {g->trivial_subgroup()}); }

GLattice sign_lattice(const Subgroup& h) {
  const auto& g = h.parent();
  if (h.order() * 2 != g->order()) throw InputError("sign lattice needs a subgroup of index 2");
  std::vector<IntMatrix> mats;
  for (Element s : g->generators()) mats.push_back(IntMatrix{{h.contains(s) ? 1L : -1L}});
  return GLattice(g, 1, g->generators(), std::move(mats), false);
}

GLattice augmentation_ideal(const GroupPtr& g) {
  const std::size_t r = g->order() - 1;
  std::vector<IntMatrix> mats;
  for (Element s : g->generators()) {
    IntMatrix a(r, r);
    for (Element x = 1; x < g->order(); ++x) {
      Element y = g->mul(s, x);
      if (y != 0) a(y - 1, x - 1) += 1;
      if (s != 0) a(s - 1, x - 1) -= 1;
    }
    mats.push_back(std::move(a));
  }
  return GLattice(g, r, g->generators(), std::move(mats), false);
}

GLattice dual(const GLattice& m) {
  std::vector<IntMatrix> mats;
  for (Element s : m.generators()) mats.push_back(m.action(m.group()->inv(s)).transpose());
  return GLattice(m.group(), m.rank(), m.generators(), std::move(mats), false);
}

GLattice direct_sum(const GLattice& m, const GLattice& n) {
  if (m.group() != n.group() && !(*m.group() == *n.group())) throw InputError("direct sum over different groups");
  std::vector<IntMatrix> mats;
  for (Element s : m.generators()) mats.push_back(block_diagonal(m.action(s), n.action(s)));
  return GLattice(m.group(), m.rank() + n.rank(), m.generators(), std::move(mats), false);
}

GLattice restrict(const GLattice& m, const Subgroup& h) {
  if (!h.parent() || !(*h.parent() == *m.group())) throw InputError("restriction to a subgroup of another group");
  auto sg = subgroup_as_group(h);
  std::vector<IntMatrix> mats;
  for (Element s : sg.group->generators()) mats.push_back(m.action(sg.embedding[s]));
  return GLattice(sg.group, m.rank(), sg.group->generators(), std::move(mats), false);
}

GLattice descend(const GLattice& m, const Quotient& q) {
  const auto& g = *m.group();
  for (Element x = 0; x < g.order(); ++x)
    if (q.projection[x] == 0 && !m.action(x).is_identity())
      throw InputError("kernel of the quotient does not act trivially");
  std::vector<IntMatrix> mats;
  for (Element s : q.group->generators()) {
    Element pre = 0;
    while (q.projection[pre] != s) ++pre;
    mats.push_back(m.action(pre));
  }
  return GLattice(q.group, m.rank(), q.group->generators(), std::move(mats), false);
}

Subgroup action_kernel(const GLattice& m) {
  std::vector<Element> k;
  for (Element x = 0; x < m.group()->order(); ++x)
    if (m.action(x).is_identity()) k.push_back(x);
  return m.group()->make_subgroup(std::move(k));
}

bool is_faithful(const GLattice& m) {
  for (Element x = 1; x < m.group()->order(); ++x)
    if (m.action(x).is_identity()) return false;
  return true;
}

GLattice sublattice(const GLattice& m, const IntMatrix& basis) {
  std::vector<IntMatrix> mats;
  for (Element s : m.generators()) {
    auto x = solve_in_basis(basis, m.action(s) * basis);
    if (!x) throw InputError("sublattice is not stable under the group");
    mats.push_back(std::move(*x));
  }
  return GLattice(m.group(), basis.cols(), m.generators(), std::move(mats), false);
}

LenstraData lenstra_lattice(unsigned n) {
  if (n < 2 || n > 6) throw InputError("lenstra_lattice needs 2 <= n <= 6");
  LenstraData out;
  const std::size_t q = std::size_t{1} << n;
  out.q = q;
  // (Z/q)^x with units in increasing order; element i is the unit 2i + 1
  {
    std::vector<std::size_t> units;
    for (std::size_t u = 1; u < q; u += 2) units.push_back(u);
    FiniteGroup::Table t(units.size(), std::vector<Element>(units.size()));
    for (Element i = 0; i < units.size(); ++i)
      for (Element j = 0; j < units.size(); ++j) t[i][j] = (units[i] * units[j] % q) / 2;
    out.pi = FiniteGroup::from_table(t, "U(2^" + std::to_string(n) + ")");
  }
  const auto& pi = out.pi;
  const std::size_t r = q - 1;
  std::vector<IntMatrix> mats;
  for (Element s : pi->generators()) {
    const std::size_t t = 2 * s + 1;
    IntMatrix a(r, r);
    for (std::size_t i = 1; i < q; ++i) a(t * i % q - 1, i - 1) = 1;
    mats.push_back(std::move(a));
  }
  out.N = GLattice(pi, r, pi->generators(), std::move(mats), false);
  for (std::size_t i = 1; i < q; ++i) out.phi.push_back(i);

  IntMatrix congruence(1, q);
  for (std::size_t i = 1; i < q; ++i) congruence(0, i - 1) = static_cast<long>(i);
  congruence(0, q - 1) = static_cast<long>(q);
  IntMatrix k = kernel_basis(congruence);
  IntMatrix basis = column_hnf(k.block(0, 0, r, k.cols()));
  if (basis.cols() != r) throw InternalError("congruence kernel has the wrong rank");
  out.M = sublattice(out.N, basis);
  out.inclusion = LatticeMap{out.M, out.N, basis};
  return out;
}

}  // namespace rrat

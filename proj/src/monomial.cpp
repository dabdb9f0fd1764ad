#include "rrat/monomial.hpp"

#include "rrat/errors.hpp"

namespace rrat {

namespace {

Integer mod(const Integer& x, long d) {
  Integer r = x % d;
  if (r < 0) r += d;
  return r;
}

IntVector reduce(IntVector v, long d) {
  for (auto& x : v) x = mod(x, d);
  return v;
}

IntVector row_times(const IntVector& c, const IntMatrix& a) {
  IntVector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(c[i]) != 0 && sgn(a(i, j)) != 0) out[j] += c[i] * a(i, j);
  return out;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// v with v (A(s) - 1) = c(s) mod d for every generator s.
std::optional<IntVector> coboundary_witness(const MonomialAction& a) {
  const auto& m = a.lattice();
  const std::size_t r = m.rank();
  const auto& gens = m.generators();
  const std::size_t eqs = gens.size() * r;
  IntMatrix sys(eqs, r + eqs);
  IntVector rhs(eqs);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const IntMatrix& A = m.action(gens[k]);
    const IntVector& c = a.coefficients(gens[k]);
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t row = k * r + j;
      for (std::size_t i = 0; i < r; ++i) sys(row, i) = A(i, j) - (i == j ? 1 : 0);
      sys(row, r + row) = a.d();
      rhs[row] = c[j];
    }
  }
  auto sol = solve_integer(sys, rhs);
  if (!sol) return std::nullopt;
  IntVector v(sol->begin(), sol->begin() + static_cast<long>(r));
  return reduce(std::move(v), a.d());
}

}  // namespace

MonomialAction::MonomialAction(GLattice lattice, long d, std::vector<IntVector> coeff)
    : lattice_(std::move(lattice)), d_(d), coeff_(std::move(coeff)) {
  if (d_ < 1) throw InputError("coefficient modulus d must be positive");
  const auto& gens = lattice_.generators();
  const std::size_t r = lattice_.rank();
  if (coeff_.size() != gens.size()) throw InputError("one coefficient vector per generator expected");
  for (auto& c : coeff_) {
    if (c.size() != r) throw InputError("coefficient vector has the wrong length");
    c = reduce(std::move(c), d_);
  }
  const auto& g = *lattice_.group();
  all_.assign(g.order(), IntVector());
  std::vector<bool> set(g.order(), false);
  all_[0] = IntVector(r);
  set[0] = true;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = g.mul(x, gens[k]);
      if (set[y]) continue;
      all_[y] = reduce(add(row_times(all_[x], lattice_.action(gens[k])), coeff_[k]), d_);
      set[y] = true;
      queue.push_back(y);
    }
  }
  if (queue.size() != g.order()) throw InputError("action generators do not generate the group");
  for (Element x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      IntVector c = reduce(add(row_times(all_[x], lattice_.action(gens[k])), coeff_[k]), d_);
      if (c != all_[g.mul(x, gens[k])]) throw InputError("coefficients do not define a group action");
    }
}

bool MonomialAction::is_purely_monomial() const {
  for (const auto& c : coeff_)
    for (const auto& x : c)
      if (sgn(x) != 0) return false;
  return true;
}

Subgroup MonomialAction::kernel() const {
  std::vector<Element> k;
  for (Element x = 0; x < lattice_.group()->order(); ++x) {
    if (!lattice_.action(x).is_identity()) continue;
    bool zero = true;
    for (const auto& e : all_[x]) zero = zero && sgn(e) == 0;
    if (zero) k.push_back(x);
  }
  return lattice_.group()->make_subgroup(std::move(k));
}

bool MonomialAction::is_faithful() const { return kernel().is_trivial(); }

MonomialAction rescale(const MonomialAction& a, const IntVector& v) {
  const auto& m = a.lattice();
  if (v.size() != m.rank()) throw InputError("rescaling vector has the wrong length");
  std::vector<IntVector> coeff;
  for (Element s : m.generators()) {
    IntVector c = add(a.coefficients(s), v);
    IntVector va = row_times(v, m.action(s));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= va[j];
    coeff.push_back(std::move(c));
  }
  return MonomialAction(m, a.d(), std::move(coeff));
}

MonomialAction enlarge(const MonomialAction& a, long m) {
  if (m < 1) throw InputError("enlargement factor must be positive");
  std::vector<IntVector> coeff;
  for (Element s : a.lattice().generators()) {
    IntVector c = a.coefficients(s);
    for (auto& x : c) x *= m;
    coeff.push_back(std::move(c));
  }
  return MonomialAction(a.lattice(), a.d() * m, std::move(coeff));
}

ExtensionClass extension_class(const MonomialAction& a) {
  ExtensionClass e;
  e.action = a;
  const auto& m = a.lattice();
  const auto& g = *m.group();
  for (Element x = 0; x < g.order(); ++x) {
    const IntMatrix& ainv = m.action(g.inv(x));
    e.cocycle.push_back(reduce(row_times(a.coefficients(x), ainv), a.d()));  // row form
  }
  e.witness = coboundary_witness(a);
  e.vanishes_at_d = e.witness.has_value();
  e.stable_witness = coboundary_witness(enlarge(a, static_cast<long>(g.order())));
  e.vanishes_stably = e.stable_witness.has_value();
  if (e.vanishes_at_d && !rescale(a, *e.witness).is_purely_monomial())
    throw InternalError("rescaling witness leaves coefficients");
  if (e.vanishes_stably &&
      !rescale(enlarge(a, static_cast<long>(g.order())), *e.stable_witness).is_purely_monomial())
    throw InternalError("stable rescaling witness leaves coefficients");
  if (!verify_cocycle(e)) throw InternalError("extension cocycle fails the cocycle identity");
  return e;
}

bool verify_cocycle(const ExtensionClass& e) {
  const auto& m = e.action.lattice();
  const auto& g = *m.group();
  const long d = e.action.d();
  for (Element x = 0; x < g.order(); ++x) {
    const IntMatrix& ainv = m.action(g.inv(x));
    for (Element y = 0; y < g.order(); ++y) {
      // g.phi = phi A(g^-1) in row form
      IntVector rhs = add(e.cocycle[x], row_times(e.cocycle[y], ainv));
      if (reduce(std::move(rhs), d) != e.cocycle[g.mul(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace rrat

#include "rrat/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "detail/engine.hpp"
#include "rrat/errors.hpp"

namespace rrat {

using detail::Dense;
using detail::Row;

namespace {

// Runs fn<Small>() and falls back to fn<mpz_class>() if any intermediate value
// leaves the machine-word window.
template <class F>
decltype(auto) with_fast_path(F&& fn) {
  try {
    return fn.template operator()<detail::Small>();
  } catch (const detail::Overflow&) {
    return fn.template operator()<mpz_class>();
  }
}

template <class T>
Row<T> to_row(const IntVector& v) {
  Row<T> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(detail::from_integer<T>(x));
  return r;
}

template <class T>
Dense<T> to_dense_rows(const IntMatrix& a) {
  Dense<T> d(a.rows(), Row<T>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = detail::from_integer<T>(a(i, j));
  return d;
}

// Columns of a as rows.
template <class T>
Dense<T> to_dense_columns(const IntMatrix& a) {
  Dense<T> d(a.cols(), Row<T>(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[j][i] = detail::from_integer<T>(a(i, j));
  return d;
}

template <class T>
IntVector to_vector(const Row<T>& r) {
  IntVector v;
  v.reserve(r.size());
  for (const auto& x : r) v.push_back(detail::to_integer(x));
  return v;
}

template <class T>
std::vector<Integer> smith_diagonal(Dense<T> a, std::size_t m, std::size_t n) {
  auto res = detail::smith(std::move(a), m, n, false);
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (detail::is_zero(res.d[i][i])) break;
    diag.push_back(detail::to_integer(res.d[i][i]));
  }
  return diag;
}

}  // namespace

// ---- IntMatrix ------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Integer& y = b(k, j);
        if (sgn(y) != 0) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  return c;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0)
        mpz_addmul(y[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
  return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  return with_fast_path([&]<class T>() {
    auto res = detail::smith(to_dense_rows<T>(a), m, n, true);
    SmithDecomposition out{IntMatrix(m, m), IntMatrix(m, n), IntMatrix(n, n)};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out.U(i, j) = detail::to_integer(res.u[i][j]);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out.D(i, j) = detail::to_integer(res.d[i][j]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out.V(i, j) = detail::to_integer(res.v[j][i]);
    return out;
  });
}

// ---- AbelianInvariants ----------------------------------------------------

Integer AbelianInvariants::order() const {
  if (!is_finite()) throw InputError("order of an infinite abelian group");
  Integer o = 1;
  for (const auto& d : divisors) o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : divisors) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << '^' << free_rank;
  }
  return os.str();
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<Integer>& orders) {
  AbelianInvariants inv;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) ++inv.free_rank;
    else if (abs(o) != 1) finite.push_back(abs(o));
  }
  const std::size_t k = finite.size();
  IntMatrix diag(k, k);
  for (std::size_t i = 0; i < k; ++i) diag(i, i) = finite[i];
  auto d = with_fast_path([&]<class T>() { return smith_diagonal(to_dense_rows<T>(diag), k, k); });
  for (const auto& x : d)
    if (x != 1) inv.divisors.push_back(x);
  return inv;
}

// ---- solving and lattices -------------------------------------------------

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw InputError("solve_integer: dimension mismatch");
  const std::size_t n = a.cols();
  return with_fast_path([&]<class T>() -> std::optional<IntVector> {
    detail::Echelon<T> ech(n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Row<T> r(n + 1);
      bool any = false;
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = detail::from_integer<T>(a(i, j));
        any = any || !detail::is_zero(r[j]);
      }
      r[n] = detail::from_integer<T>(b[i]);
      if (!any && detail::is_zero(r[n])) continue;
      ech.add(std::move(r));
    }
    if (!ech.pivots().empty() && ech.pivots().back() == n) return std::nullopt;
    const std::size_t rho = ech.rank();
    if (rho == 0) return IntVector(n);
    Dense<T> lhs(rho, Row<T>(n));
    Row<T> rhs(rho);
    for (std::size_t i = 0; i < rho; ++i) {
      for (std::size_t j = 0; j < n; ++j) lhs[i][j] = ech.rows()[i][j];
      rhs[i] = ech.rows()[i][n];
    }
    detail::ColumnReducer<T> red(lhs, n, false);
    if (red.rank() != rho) throw InternalError("solve_integer: echelon rows lost rank");
    Row<T> y(n);
    for (std::size_t i = 0; i < rho; ++i) {
      T acc = rhs[i];
      for (std::size_t j = 0; j < i; ++j)
        if (!detail::is_zero(y[j])) detail::sub_mul(acc, red.lower(i, j), y[j]);
      if (!detail::divides(red.lower(i, i), acc)) return std::nullopt;
      y[i] = detail::tdiv(acc, red.lower(i, i));
    }
    return to_vector(red.apply_transform(std::move(y)));
  });
}

IntMatrix column_hnf(const IntMatrix& generators) {
  const std::size_t r = generators.rows();
  return with_fast_path([&]<class T>() {
    auto ech = detail::echelon_of(to_dense_columns<T>(generators), r);
    ech.reduce_above();
    IntMatrix basis(r, ech.rank());
    for (std::size_t k = 0; k < ech.rank(); ++k)
      for (std::size_t i = 0; i < r; ++i) basis(i, k) = detail::to_integer(ech.rows()[k][i]);
    return basis;
  });
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  IntMatrix raw = with_fast_path([&]<class T>() {
    auto ech = detail::echelon_of(to_dense_rows<T>(a), n);
    if (ech.rank() == 0) return IntMatrix::identity(n);
    detail::ColumnReducer<T> red(ech.rows(), n, true);
    auto cols = red.kernel_columns();
    IntMatrix k(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) k(i, j) = detail::to_integer(cols[j][i]);
    return k;
  });
  if (raw.cols() == 0) return raw;
  return column_hnf(raw);
}

AbelianInvariants cokernel_invariants(const IntMatrix& a, std::size_t ambient_rank) {
  if (a.rows() != ambient_rank) throw InputError("cokernel_invariants: dimension mismatch");
  return with_fast_path([&]<class T>() {
    auto ech = detail::echelon_of(to_dense_columns<T>(a), ambient_rank);
    const std::size_t rho = ech.rank();
    AbelianInvariants inv;
    inv.free_rank = ambient_rank - rho;
    for (const auto& d : smith_diagonal(ech.rows(), rho, ambient_rank))
      if (d != 1) inv.divisors.push_back(d);
    return inv;
  });
}

AbelianInvariants cokernel_torsion(const IntMatrix& a) {
  auto inv = cokernel_invariants(a, a.rows());
  inv.free_rank = 0;
  return inv;
}

std::optional<IntMatrix> solve_in_basis(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows()) throw InputError("solve_in_basis: dimension mismatch");
  const std::size_t k = basis.cols(), s = targets.cols();
  return with_fast_path([&]<class T>() -> std::optional<IntMatrix> {
    detail::Echelon<T> ech(k + s);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Row<T> r(k + s);
      for (std::size_t j = 0; j < k; ++j) r[j] = detail::from_integer<T>(basis(i, j));
      for (std::size_t j = 0; j < s; ++j) r[k + j] = detail::from_integer<T>(targets(i, j));
      ech.add(std::move(r));
    }
    for (std::size_t p = 0; p < ech.rank(); ++p)
      if (ech.pivots()[p] != p) {
        if (p < k) throw InputError("solve_in_basis: basis is not of full column rank");
        return std::nullopt;
      }
    if (ech.rank() < k) throw InputError("solve_in_basis: basis is not of full column rank");
    const auto& rows = ech.rows();
    Dense<T> x(k, Row<T>(s));
    for (std::size_t c = 0; c < s; ++c) {
      for (std::size_t ii = k; ii-- > 0;) {
        T acc = rows[ii][k + c];
        for (std::size_t j = ii + 1; j < k; ++j)
          if (!detail::is_zero(x[j][c])) detail::sub_mul(acc, rows[ii][j], x[j][c]);
        if (!detail::divides(rows[ii][ii], acc)) return std::nullopt;
        x[ii][c] = detail::tdiv(acc, rows[ii][ii]);
      }
    }
    IntMatrix out(k, s);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < s; ++j) out(i, j) = detail::to_integer(x[i][j]);
    return out;
  });
}

std::size_t rank(const IntMatrix& a) {
  return with_fast_path([&]<class T>() { return detail::echelon_of(to_dense_rows<T>(a), a.cols()).rank(); });
}

// ---- SublatticeBuilder ------------------------------------------------------

struct SublatticeBuilder::Impl {
  explicit Impl(std::size_t n) : ech(n) {}
  detail::Echelon<mpz_class> ech;
};

SublatticeBuilder::SublatticeBuilder(std::size_t n) : impl_(std::make_unique<Impl>(n)) {}
SublatticeBuilder::~SublatticeBuilder() = default;
SublatticeBuilder::SublatticeBuilder(SublatticeBuilder&&) noexcept = default;
SublatticeBuilder& SublatticeBuilder::operator=(SublatticeBuilder&&) noexcept = default;

std::size_t SublatticeBuilder::dimension() const { return impl_->ech.ncols(); }
std::size_t SublatticeBuilder::rank() const { return impl_->ech.rank(); }

void SublatticeBuilder::add(const IntVector& v) {
  if (v.size() != dimension()) throw InputError("SublatticeBuilder: dimension mismatch");
  impl_->ech.add(v);
}

bool SublatticeBuilder::contains(const IntVector& v) const {
  if (v.size() != dimension()) throw InputError("SublatticeBuilder: dimension mismatch");
  Row<mpz_class> r = v;
  return impl_->ech.reduce(r);
}

IntMatrix SublatticeBuilder::basis() const {
  IntMatrix b(dimension(), rank());
  for (std::size_t k = 0; k < rank(); ++k)
    for (std::size_t i = 0; i < dimension(); ++i) b(i, k) = impl_->ech.rows()[k][i];
  return b;
}

}  // namespace rrat

#pragma once

// Exact integer elimination kernels, generic over the scalar back end.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace rrat::detail {

template <class T>
using Row = std::vector<T>;

template <class T>
using Dense = std::vector<Row<T>>;

template <class T>
std::size_t first_nonzero(const Row<T>& v, std::size_t from) {
  for (std::size_t j = from; j < v.size(); ++j)
    if (!is_zero(v[j])) return j;
  return v.size();
}

// dst[j] -= q * src[j] for j >= from
template <class T>
void row_sub_mul(Row<T>& dst, const T& q, const Row<T>& src, std::size_t from) {
  for (std::size_t j = from; j < src.size(); ++j)
    if (!is_zero(src[j])) sub_mul(dst[j], q, src[j]);
}

template <class T>
void negate_row(Row<T>& v) {
  for (auto& x : v)
    if (!is_zero(x)) x = neg(x);
}

// Integer row echelon form maintained under insertion. Rows are kept sorted by
// pivot column with positive pivots; only unimodular row operations are used,
// so the row lattice is exactly the lattice spanned by everything added.
template <class T>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const Dense<T>& rows() const { return rows_; }
  Dense<T>& rows() { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // Returns true when the rank grew.
  bool add(Row<T> v) {
    std::size_t lead = first_nonzero(v, 0);
    while (lead < ncols_) {
      auto it = std::lower_bound(piv_.begin(), piv_.end(), lead);
      auto k = static_cast<std::size_t>(it - piv_.begin());
      if (it == piv_.end() || *it != lead) {
        if (sgn(v[lead]) < 0) negate_row(v);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
        piv_.insert(it, lead);
        return true;
      }
      Row<T>& r = rows_[k];
      if (divides(r[lead], v[lead])) {
        T q = tdiv(v[lead], r[lead]);
        row_sub_mul(v, q, r, lead);
      } else {
        T g, s, t;
        xgcd(g, s, t, r[lead], v[lead]);
        T a = tdiv(r[lead], g);
        T b = tdiv(v[lead], g);
        for (std::size_t j = lead; j < ncols_; ++j) {
          if (is_zero(r[j]) && is_zero(v[j])) continue;
          T nr = mul(s, r[j]);
          add_mul(nr, t, v[j]);
          T nv = mul(a, v[j]);
          sub_mul(nv, b, r[j]);
          r[j] = std::move(nr);
          v[j] = std::move(nv);
        }
      }
      lead = first_nonzero(v, lead + 1);
    }
    return false;
  }

  // Reduces v against the rows; true iff v lies in the row lattice. On return v
  // holds the remainder (zero on success).
  bool reduce(Row<T>& v) const {
    std::size_t lead = first_nonzero(v, 0);
    while (lead < ncols_) {
      auto it = std::lower_bound(piv_.begin(), piv_.end(), lead);
      if (it == piv_.end() || *it != lead) return false;
      const Row<T>& r = rows_[static_cast<std::size_t>(it - piv_.begin())];
      if (!divides(r[lead], v[lead])) return false;
      T q = tdiv(v[lead], r[lead]);
      row_sub_mul(v, q, r, lead);
      lead = first_nonzero(v, lead + 1);
    }
    return true;
  }

  // Brings entries above each pivot into [0, pivot): the row Hermite normal form.
  void reduce_above() {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = piv_[k];
      for (std::size_t i = 0; i < k; ++i) {
        if (is_zero(rows_[i][p])) continue;
        T q = fdiv(rows_[i][p], rows_[k][p]);
        if (!is_zero(q)) row_sub_mul(rows_[i], q, rows_[k], p);
      }
    }
  }

 private:
  std::size_t ncols_;
  Dense<T> rows_;
  std::vector<std::size_t> piv_;
};

template <class T>
Echelon<T> echelon_of(const Dense<T>& rows, std::size_t ncols) {
  Echelon<T> e(ncols);
  for (const auto& r : rows) e.add(r);
  return e;
}

// One recorded elementary column operation.
struct ColumnOp {
  std::size_t target;  // column j
  std::size_t source;  // column k
  bool swap;           // swap j and k, otherwise col_j -= q * col_k
  std::size_t q_index; // index into the quotient store (unused for swaps)
};

// Column reduction of a full-row-rank echelon matrix R (rho x n) to the shape
// [L | 0] with L lower triangular. The transform V (R*V = [L|0]) is either
// materialized or recorded as an operation log, depending on the caller.
template <class T>
class ColumnReducer {
 public:
  ColumnReducer(const Dense<T>& rows, std::size_t ncols, bool track_transform)
      : n_(ncols), rho_(rows.size()), track_(track_transform) {
    cols_.assign(n_, Row<T>(rho_));
    for (std::size_t i = 0; i < rho_; ++i)
      for (std::size_t j = 0; j < n_; ++j) cols_[j][i] = rows[i][j];
    if (track_) {
      v_.assign(n_, Row<T>(n_));
      for (std::size_t j = 0; j < n_; ++j) v_[j][j] = T(1);
    }
    run();
  }

  std::size_t rank() const { return rank_; }
  const T& lower(std::size_t i, std::size_t j) const { return cols_[j][i]; }

  // Columns of the transform beyond the rank: a basis of the kernel of R.
  Dense<T> kernel_columns() const {
    Dense<T> out;
    for (std::size_t j = rank_; j < n_; ++j) out.push_back(v_[j]);
    return out;
  }

  // x = V * y, replaying the log backwards (V = E_1 E_2 ... E_T).
  Row<T> apply_transform(Row<T> y) const {
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
      if (it->swap) {
        std::swap(y[it->target], y[it->source]);
      } else if (!is_zero(y[it->target])) {
        // E = I - q e_k e_j^T : (E y)_k = y_k - q y_j
        sub_mul(y[it->source], quotients_[it->q_index], y[it->target]);
      }
    }
    return y;
  }

 private:
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(cols_[a], cols_[b]);
    if (track_) std::swap(v_[a], v_[b]);
    else log_.push_back({a, b, true, 0});
  }

  void col_sub(std::size_t j, const T& q, std::size_t k, std::size_t from_row) {
    for (std::size_t i = from_row; i < rho_; ++i)
      if (!is_zero(cols_[k][i])) sub_mul(cols_[j][i], q, cols_[k][i]);
    if (track_) {
      row_sub_mul(v_[j], q, v_[k], 0);
    } else {
      quotients_.push_back(q);
      log_.push_back({j, k, false, quotients_.size() - 1});
    }
  }

  void run() {
    std::size_t k = 0;
    for (std::size_t i = 0; i < rho_ && k < n_; ++i) {
      for (;;) {
        std::size_t best = n_;
        for (std::size_t j = k; j < n_; ++j) {
          if (is_zero(cols_[j][i])) continue;
          if (best == n_ || abs_less(cols_[j][i], cols_[best][i])) best = j;
        }
        if (best == n_) break;
        swap_cols(k, best);
        bool clean = true;
        for (std::size_t j = k + 1; j < n_; ++j) {
          if (is_zero(cols_[j][i])) continue;
          T q = tdiv(cols_[j][i], cols_[k][i]);
          col_sub(j, q, k, i);
          if (!is_zero(cols_[j][i])) clean = false;
        }
        if (clean) {
          ++k;
          break;
        }
      }
    }
    rank_ = k;
  }

  std::size_t n_, rho_;
  bool track_;
  std::size_t rank_ = 0;
  Dense<T> cols_;
  Dense<T> v_;
  std::vector<ColumnOp> log_;
  std::vector<T> quotients_;
};

template <class T>
struct SmithResult {
  Dense<T> d;  // transformed matrix (diagonal)
  Dense<T> u;  // rows x rows, empty when not tracked
  Dense<T> v;  // stored column-major: v[j] is column j; empty when not tracked
};

// Smith normal form by minimal-absolute-value pivoting (ties: smallest row,
// then smallest column). U*A*V = D with d_1 | d_2 | ... and d_i >= 0.
template <class T>
SmithResult<T> smith(Dense<T> a, std::size_t m, std::size_t n, bool track) {
  SmithResult<T> res;
  if (track) {
    res.u.assign(m, Row<T>(m));
    for (std::size_t i = 0; i < m; ++i) res.u[i][i] = T(1);
    res.v.assign(n, Row<T>(n));
    for (std::size_t j = 0; j < n; ++j) res.v[j][j] = T(1);
  }
  auto& u = res.u;
  auto& v = res.v;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool finished = false;
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (is_zero(a[i][j])) continue;
          if (bi == m || abs_less(a[i][j], a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) {
        finished = true;
        break;
      }
      if (bi != t) {
        std::swap(a[bi], a[t]);
        if (track) std::swap(u[bi], u[t]);
      }
      if (bj != t) {
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][bj], a[i][t]);
        if (track) std::swap(v[bj], v[t]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(a[i][t])) continue;
        T q = tdiv(a[i][t], a[t][t]);
        row_sub_mul(a[i], q, a[t], t);
        if (track) row_sub_mul(u[i], q, u[t], 0);
        if (!is_zero(a[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(a[t][j])) continue;
        T q = tdiv(a[t][j], a[t][t]);
        for (std::size_t i = t; i < m; ++i)
          if (!is_zero(a[i][t])) sub_mul(a[i][j], q, a[i][t]);
        if (track) row_sub_mul(v[j], q, v[t], 0);
        if (!is_zero(a[t][j])) clean = false;
      }
      if (!clean) continue;
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(a[i][j]) && !divides(a[t][t], a[i][j])) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      for (std::size_t j = t; j < n; ++j)
        if (!is_zero(a[bad_row][j])) a[t][j] = add(a[t][j], a[bad_row][j]);
      if (track)
        for (std::size_t j = 0; j < m; ++j)
          if (!is_zero(u[bad_row][j])) u[t][j] = add(u[t][j], u[bad_row][j]);
    }
    if (finished) break;
    if (sgn(a[t][t]) < 0) {
      negate_row(a[t]);
      if (track) negate_row(u[t]);
    }
  }
  res.d = std::move(a);
  return res;
}

}  // namespace rrat::detail

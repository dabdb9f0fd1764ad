#pragma once

// Exact integer matrices and the normal forms built on them.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rrat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix U, D, V;
};

/// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
/// Pivot: nonzero entry of least absolute value, ties to the smallest row and
/// then the smallest column.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// A finite abelian group Z/d1 + ... + Z/dk + Z^free_rank with d1 | ... | dk, di >= 2.
struct AbelianInvariants {
  std::vector<Integer> divisors;
  std::size_t free_rank = 0;

  bool is_trivial() const { return divisors.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  Integer order() const;  // requires is_finite()
  std::string to_string() const;

  /// Normalizes an arbitrary list of cyclic orders (0 = Z, 1 dropped) into the
  /// invariant-factor chain.
  static AbelianInvariants from_cyclic_orders(const std::vector<Integer>& orders);

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.divisors == b.divisors && a.free_rank == b.free_rank;
  }
};

/// Some integral x with A*x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Columns form a basis of the integral kernel of A, in column Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^ambient_rank / (column span of A).
AbelianInvariants cokernel_invariants(const IntMatrix& a, std::size_t ambient_rank);

/// Torsion subgroup of the cokernel; the quotient of two lattices of equal rank
/// whenever the larger one is saturated.
AbelianInvariants cokernel_torsion(const IntMatrix& a);

/// Basis (as columns) of the lattice spanned by the columns of `generators`,
/// in Hermite form: pivots positive, entries beside each pivot reduced.
IntMatrix column_hnf(const IntMatrix& generators);

/// X with basis*X = targets, for `basis` of full column rank; nullopt when some
/// target column is not an integral combination of the basis columns.
std::optional<IntMatrix> solve_in_basis(const IntMatrix& basis, const IntMatrix& targets);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Incrementally grown sublattice of Z^n with membership tests.
class SublatticeBuilder {
 public:
  explicit SublatticeBuilder(std::size_t n);
  ~SublatticeBuilder();
  SublatticeBuilder(SublatticeBuilder&&) noexcept;
  SublatticeBuilder& operator=(SublatticeBuilder&&) noexcept;

  std::size_t dimension() const;
  std::size_t rank() const;
  void add(const IntVector& v);
  bool contains(const IntVector& v) const;
  IntMatrix basis() const;  // columns

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rrat

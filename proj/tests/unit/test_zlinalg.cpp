#include <random>

#include "doctest.h"
#include "rrat/errors.hpp"
#include "rrat/zlinalg.hpp"

using namespace rrat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
      if (i == j) {
        if (d(i, i) < 0) return false;
        if (d(i, i) == 0) {
          zero_seen = true;
          continue;
        }
        if (zero_seen) return false;
        if (d(i, i) % prev != 0) return false;
        prev = d(i, i);
      }
    }
  return true;
}

// every x in [-box, box]^n
bool brute_solvable(const IntMatrix& a, const IntVector& b, int box) {
  const std::size_t n = a.cols();
  std::vector<int> x(n, -box);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      ok = s == b[i];
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < n && x[k] == box) x[k++] = -box;
    if (k == n) return false;
    ++x[k];
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.D == (IntMatrix{{2, 0}, {0, 4}}));
  CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);

  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));

  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.U.is_identity());
  CHECK(z.V.is_identity());
}

TEST_CASE("solve_integer examples") {
  CHECK(solve_integer(IntMatrix{{2}}, {4}) == IntVector{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  CHECK(solve_integer(IntMatrix{{1, 2}, {3, 4}}, {5, 11}) == IntVector{1, 2});
  CHECK_THROWS_AS(solve_integer(IntMatrix{{1, 2}}, {1, 2}), InputError);
  // inconsistent over Q
  CHECK_FALSE(solve_integer(IntMatrix{{1, 1}, {1, 1}}, {1, 2}).has_value());
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(IntMatrix{{1, 1}}) == IntMatrix::from_columns({{1, -1}}, 2));
  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
  CHECK(kernel_basis(IntMatrix{{2, 4}}) == IntMatrix::from_columns({{2, -1}}, 2));
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel_invariants(IntMatrix{{2}}, 1).divisors == std::vector<Integer>{2});
  CHECK(cokernel_invariants(IntMatrix::identity(2), 2).is_trivial());
  auto c = cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}, 2);
  CHECK(c.divisors == std::vector<Integer>{6});
  CHECK(c.free_rank == 0);
  CHECK(cokernel_invariants(IntMatrix{{2}, {0}}, 2).free_rank == 1);
  CHECK_THROWS_AS(cokernel_invariants(IntMatrix{{2}}, 2), InputError);
}

TEST_CASE("from_cyclic_orders normalizes to a divisor chain") {
  auto a = AbelianInvariants::from_cyclic_orders({2, 3, 4, 1, 0});
  CHECK(a.divisors == std::vector<Integer>{2, 12});
  CHECK(a.free_rank == 1);
  CHECK(a.to_string() == "Z/2 + Z/12 + Z");
}

TEST_CASE("randomized smith decomposition") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int t = 0; t < 300; ++t) {
    auto a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(is_diagonal_chain(s.D));
  }
}

TEST_CASE("large entries take the arbitrary precision path") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("1180591620717411303424");  // 2^70
  a(0, 1) = 3;
  a(1, 0) = Integer("-590295810358705651712");
  a(1, 1) = Integer("4611686018427387904");
  auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(is_diagonal_chain(s.D));
  Integer prod = s.D(0, 0) * s.D(1, 1);
  CHECK(prod == abs(determinant(a)));
  auto x = solve_integer(a, a * IntVector{5, -7});
  REQUIRE(x.has_value());
  CHECK(a * *x == a * IntVector{5, -7});
}

TEST_CASE("solve_integer agrees with bounded brute force") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> rhs(-6, 6);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(rng, dim(rng), dim(rng), -3, 3);
    IntVector b(a.rows());
    for (auto& v : b) v = rhs(rng);
    auto x = solve_integer(a, b);
    bool brute = brute_solvable(a, b, 8);
    if (x) CHECK(a * *x == b);
    if (brute) CHECK(x.has_value());
    if (!x) CHECK_FALSE(brute);
  }
}

TEST_CASE("kernel bases are saturated and complete") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(rng, dim(rng), dim(rng), -4, 4);
    auto k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(k.cols() + rank(a) == a.cols());
    // saturated: the quotient Z^n / span(K) is torsion free
    CHECK(cokernel_invariants(k, a.cols()).divisors.empty());
  }
}

TEST_CASE("cokernel order matches determinant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto a = random_matrix(rng, 4, 4, -5, 5);
    Integer d = determinant(a);
    auto c = cokernel_invariants(a, 4);
    if (d == 0) {
      CHECK(c.free_rank > 0);
    } else {
      CHECK(c.order() == abs(d));
    }
  }
}

TEST_CASE("column_hnf and solve_in_basis") {
  IntMatrix gens = IntMatrix::from_columns({{2, 0, 2}, {0, 2, 2}, {2, 2, 4}}, 3);
  auto h = column_hnf(gens);
  CHECK(h.cols() == 2);
  auto x = solve_in_basis(h, gens);
  REQUIRE(x.has_value());
  CHECK(h * *x == gens);
  CHECK_FALSE(solve_in_basis(h, IntMatrix::from_columns({{1, 0, 1}}, 3)).has_value());
  CHECK_FALSE(solve_in_basis(h, IntMatrix::from_columns({{1, 0, 0}}, 3)).has_value());
}

TEST_CASE("sublattice builder membership") {
  SublatticeBuilder b(2);
  b.add({2, 0});
  CHECK(b.contains({4, 0}));
  CHECK_FALSE(b.contains({1, 0}));
  b.add({3, 0});
  CHECK(b.contains({1, 0}));
  CHECK(b.rank() == 1);
  b.add({0, 5});
  CHECK(b.rank() == 2);
  CHECK(b.contains({7, -10}));
  CHECK_FALSE(b.contains({0, 1}));
}

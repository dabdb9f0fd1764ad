#include "doctest.h"
#include "rrat/errors.hpp"
#include "rrat/random.hpp"
#include "rrat/resolutions.hpp"

using namespace rrat;

namespace {

IntMatrix fixed(const GLattice& m, const Subgroup& h) {
  const std::size_t r = m.rank();
  IntMatrix stacked(h.order() * r, r);
  std::size_t k = 0;
  for (Element x : h.members()) stacked.set_block(k++ * r, 0, m.action(x) - IntMatrix::identity(r));
  return kernel_basis(stacked);
}

// P^H -> M^H onto, checked element by element of M^H.
bool onto_fixed_points(const FixedPointCover& c, const Subgroup& h) {
  IntMatrix image = c.projection.matrix * fixed(c.P, h);
  IntMatrix target = fixed(c.M, h);
  for (std::size_t j = 0; j < target.cols(); ++j)
    if (!solve_integer(image, target.column(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("covers are onto on fixed points of every subgroup") {
  Rng rng(3);
  for (const char* name : {"C4", "V4", "S3", "D8", "Q8", "C6", "A4"}) {
    auto g = catalog_group(name);
    CAPTURE(name);
    for (int t = 0; t < 8; ++t) {
      auto m = random_lattice(g, rng);
      auto c = fixed_point_cover(m);
      CHECK(c.projection.is_equivariant());
      for (const auto& h : g->subgroups()) REQUIRE(onto_fixed_points(c, h));
      CHECK((c.projection.matrix * c.inclusion.matrix).is_zero());
      CHECK(c.C.rank() + m.rank() == c.P.rank());
    }
  }
}

TEST_CASE("flabby resolutions are exact with F flabby") {
  Rng rng(4);
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > 12) continue;
    CAPTURE(name);
    for (int t = 0; t < 4; ++t) {
      auto m = random_lattice(g, rng);
      auto r = flabby_resolution(m);
      CHECK(r.injection.is_equivariant());
      CHECK(r.surjection.is_equivariant());
      CHECK((r.surjection.matrix * r.injection.matrix).is_zero());
      CHECK(is_flabby(r.F, SubgroupMode::All));
      // injection saturated, surjection onto
      CHECK(cokernel_invariants(r.injection.matrix, r.P.rank()).divisors.empty());
      CHECK(cokernel_invariants(r.surjection.matrix, r.F.rank()).is_trivial());
    }
  }
}

TEST_CASE("invertibility decisions") {
  auto c2 = catalog_group("C2");
  auto sign = sign_lattice(c2->trivial_subgroup());
  CHECK_FALSE(is_invertible(sign).invertible);
  CHECK(is_invertible(trivial_lattice(c2)).invertible);
  CHECK(is_invertible(regular_lattice(c2)).invertible);
  CHECK_FALSE(is_invertible(direct_sum(sign, trivial_lattice(c2))).invertible);
  CHECK_FALSE(is_invertible(lenstra_lattice(3).M).invertible);
  CHECK_FALSE(is_invertible(flabby_resolution(lenstra_lattice(3).M).F).invertible);

  Rng rng(6);
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > 12) continue;
    CAPTURE(name);
    for (int t = 0; t < 4; ++t) {
      auto p = random_permutation_lattice(g, rng, 12);
      auto d = is_invertible(p);
      REQUIRE(d.invertible);
      CHECK(verify_section(d.cover, d.witness->matrix));
      // a direct summand of an invertible lattice stays invertible
      auto m = random_lattice(g, rng);
      auto dm = is_invertible(m);
      if (dm.invertible) {
        CHECK(verify_section(dm.cover, dm.witness->matrix));
        CHECK(is_flabby(m, SubgroupMode::All));
        CHECK(is_coflabby(m, SubgroupMode::All));
      }
      CHECK(is_invertible(direct_sum(m, p)).invertible == dm.invertible);
    }
  }
}

TEST_CASE("fingerprint is a similarity invariant") {
  Rng rng(10);
  for (const char* name : {"V4", "C4", "S3", "D8", "Q8"}) {
    auto g = catalog_group(name);
    CAPTURE(name);
    for (int t = 0; t < 3; ++t) {
      auto m = random_lattice(g, rng);
      auto f = class_fingerprint(m);
      for (const auto& h : g->subgroups())
        REQUIRE(class_fingerprint(direct_sum(m, permutation_lattice(g, {h}))) == f);
    }
  }
  // permutation lattices have trivial class
  for (const auto& e : class_fingerprint(regular_lattice(catalog_group("D8")))) {
    CHECK(e.h_minus1.is_trivial());
    CHECK(e.h1.is_trivial());
  }
}

TEST_CASE("cover rank bound") {
  CHECK_THROWS_AS(fixed_point_cover(lenstra_lattice(4).M, 10), ResourceError);
}

#include "doctest.h"
#include "oracles.hpp"
#include "rrat/cohomology.hpp"
#include "rrat/random.hpp"

using namespace rrat;

namespace {

AbelianInvariants cyclic(long n) { return AbelianInvariants::from_cyclic_orders({Integer(n)}); }

}  // namespace

TEST_CASE("trivial and sign lattices") {
  for (const char* name : {"C2", "C6", "S3", "V4", "Q8"}) {
    auto g = catalog_group(name);
    auto z = trivial_lattice(g);
    auto whole = g->whole();
    CAPTURE(name);
    CHECK(tate_zero(whole, z) == cyclic(static_cast<long>(g->order())));
    CHECK(tate_minus1(whole, z).is_trivial());
    CHECK(h1(whole, z).is_trivial());
    // dimension shift along 0 -> I_G -> Z[G] -> Z -> 0
    CHECK(h1(whole, augmentation_ideal(g)) == tate_zero(whole, z));
  }
  // and one step further: H^-1(G, I_G) is G^ab
  CHECK(tate_minus1(catalog_group("V4")->whole(), augmentation_ideal(catalog_group("V4"))) ==
        AbelianInvariants::from_cyclic_orders({Integer(2), Integer(2)}));
  CHECK(tate_minus1(catalog_group("S3")->whole(), augmentation_ideal(catalog_group("S3"))) == cyclic(2));
  auto c2 = catalog_group("C2");
  auto sign = sign_lattice(c2->trivial_subgroup());
  CHECK(h1(c2->whole(), sign) == cyclic(2));
  CHECK(tate_minus1(c2->whole(), sign) == cyclic(2));
  CHECK(tate_zero(c2->whole(), sign).is_trivial());
}

TEST_CASE("agreement with the full cocycle oracle") {
  Rng rng(11);
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > 8) continue;
    CAPTURE(name);
    for (int t = 0; t < 6; ++t) {
      auto m = random_lattice(g, rng);
      for (const auto& h : g->subgroups()) {
        REQUIRE(h1(h, m) == oracle::h1(h, m));
        REQUIRE(tate_minus1(h, m) == oracle::tate_minus1(h, m));
        REQUIRE(tate_zero(h, m) == oracle::tate_zero(h, m));
      }
    }
  }
}

TEST_CASE("permutation lattices are flabby and coflabby") {
  Rng rng(5);
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > 16) continue;
    CAPTURE(name);
    for (int t = 0; t < 3; ++t) {
      auto p = random_permutation_lattice(g, rng);
      auto prof = profile(p, SubgroupMode::All);
      CHECK(prof.is_flabby);
      CHECK(prof.is_coflabby);
    }
  }
}

TEST_CASE("cyclic periodicity and additivity") {
  Rng rng(8);
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > 16) continue;
    CAPTURE(name);
    for (int t = 0; t < 3; ++t) {
      auto m = random_lattice(g, rng);
      auto n = random_lattice(g, rng);
      auto s = direct_sum(m, n);
      for (const auto& h : g->subgroups()) {
        if (h.is_cyclic()) REQUIRE(tate_minus1(h, m) == h1(h, m));
        auto sum = [](const AbelianInvariants& a, const AbelianInvariants& b) {
          std::vector<Integer> all = a.divisors;
          all.insert(all.end(), b.divisors.begin(), b.divisors.end());
          return AbelianInvariants::from_cyclic_orders(all);
        };
        REQUIRE(h1(h, s) == sum(h1(h, m), h1(h, n)));
        REQUIRE(tate_minus1(h, s) == sum(tate_minus1(h, m), tate_minus1(h, n)));
      }
    }
  }
}

TEST_CASE("prime-power mode decides the same flags") {
  Rng rng(21);
  for (const char* name : {"S3", "C6", "A4", "D8", "C12"}) {
    auto g = catalog_group(name);
    for (int t = 0; t < 10; ++t) {
      auto m = random_lattice(g, rng);
      auto a = profile(m, SubgroupMode::All), p = profile(m, SubgroupMode::PrimePower);
      CHECK(a.is_flabby == p.is_flabby);
      CHECK(a.is_coflabby == p.is_coflabby);
    }
  }
}

TEST_CASE("lenstra lattice q = 8") {
  auto data = lenstra_lattice(3);
  auto prof = profile(data.M, SubgroupMode::All);
  CHECK(prof.is_coflabby);
  CHECK_FALSE(prof.is_flabby);
  for (const auto& e : prof.entries) {
    CHECK(e.h1.is_trivial());
    const bool klein = e.subgroup.order() == 4;
    CHECK(e.h_minus1 == (klein ? cyclic(2) : AbelianInvariants{}));
  }
}

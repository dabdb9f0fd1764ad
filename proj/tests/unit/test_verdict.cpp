#include <algorithm>

#include "doctest.h"
#include "rrat/errors.hpp"
#include "rrat/verdict.hpp"

using namespace rrat;

namespace {

bool cites(const Verdict& v, const std::string& cite) {
  return std::any_of(v.trace.begin(), v.trace.end(), [&](const TraceStep& s) { return s.cite == cite; });
}

FieldDescriptor custom(unsigned long p, bool infinite = true) {
  FieldDescriptor f;
  f.name = "custom";
  f.characteristic = p;
  f.infinite = infinite;
  return f;
}

std::vector<FieldDescriptor> fields() {
  auto no8 = custom(0);
  no8.cyclotomic_2power[3] = Tri::No;
  no8.roots_of_unity[4] = Tri::Yes;
  return {FieldDescriptor::rationals(), FieldDescriptor::complex(), custom(2), custom(3), custom(0), no8,
          custom(2, false)};
}

}  // namespace

TEST_CASE("noether examples") {
  auto Q = FieldDescriptor::rationals();
  auto C = FieldDescriptor::complex();
  auto c8 = noether_verdict(catalog_group("C8"), Q);
  CHECK(c8.answer == Answer::No);
  CHECK(cites(c8, "Theorem 2.9"));
  auto c47 = noether_verdict(catalog_group("C47"), Q);
  CHECK(c47.answer == Answer::Yes);
  CHECK(cites(c47, "Theorem 3.7"));
  auto s3 = noether_verdict(catalog_group("S3"), C);
  CHECK(s3.answer == Answer::Yes);
  CHECK(cites(s3, "Theorem 5.10"));
  CHECK(noether_verdict(catalog_group("Q8"), Q).answer == Answer::Unknown);
  for (const char* name : {"S3", "D8", "Q8"}) CHECK(cites(noether_verdict(catalog_group(name), C), "Theorem 5.10"));
}

TEST_CASE("abelian groups over Q agree with the per-factor computation") {
  auto Q = FieldDescriptor::rationals();
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (!g->is_abelian() || g->order() > 16) continue;
    CAPTURE(name);
    // k(G) is the conjunction over the cyclic prime-power factors, and
    // Q(C_2^s) is retract rational exactly when (Z/2^s)^x is cyclic.
    bool expect = true;
    for (std::size_t q : abelian_decomposition(*g))
      if (q % 2 == 0 && q > 4) expect = false;
    CHECK(noether_verdict(g, Q).answer == (expect ? Answer::Yes : Answer::No));
    CHECK(noether_verdict(g, FieldDescriptor::complex()).answer == Answer::Yes);
  }
}

TEST_CASE("2-power quotient rule") {
  auto Q = FieldDescriptor::rationals();
  auto g = catalog_group("C2xC8");
  auto v = noether_verdict(g, Q);
  CHECK(v.answer == Answer::No);
  CHECK(cites(v, "Remark after Corollary 2.10"));
  CHECK(cites(v, "Corollary 2.10"));
  // not Q: only the split clause applies
  auto f = custom(0);
  f.cyclotomic_2power[3] = Tri::No;
  auto w = noether_verdict(g, f);
  CHECK(w.answer == Answer::No);
  CHECK_FALSE(cites(w, "Remark after Corollary 2.10"));
  // characteristic 2: Theorem 3.7 gives Yes and the quotient rule is silent
  CHECK(noether_verdict(g, custom(2)).answer == Answer::Yes);
}

TEST_CASE("characteristic p reduction") {
  auto v = noether_verdict(catalog_group("Q8"), custom(2, false));
  CHECK(v.answer == Answer::Yes);
  CHECK(v.trace.front().rule == "R1");
  CHECK(replay_noether(v, catalog_group("Q8"), custom(2, false)));
  // a finite field without a normal C_p decides nothing
  CHECK(noether_verdict(catalog_group("C3"), custom(2, false)).answer == Answer::Unknown);
}

TEST_CASE("every verdict replays and no rules conflict") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    for (const auto& k : fields()) {
      CAPTURE(name);
      CAPTURE(k.key());
      Verdict v;
      REQUIRE_NOTHROW(v = noether_verdict(g, k));
      CHECK(replay_noether(v, g, k));
      CHECK(Verdict::from_json(v.to_json()).to_json() == v.to_json());
      CHECK(noether_verdict(g, k).to_json() == v.to_json());
    }
  }
}

TEST_CASE("tampered traces fail replay") {
  auto Q = FieldDescriptor::rationals();
  auto g = catalog_group("C8");
  auto v = noether_verdict(g, Q);
  auto flipped = v;
  flipped.answer = Answer::Yes;
  CHECK_FALSE(replay_noether(flipped, g, Q));
  auto wrong_field = v;
  CHECK_FALSE(replay_noether(wrong_field, g, FieldDescriptor::complex()));
  auto bad_data = v;
  bad_data.trace[0].data["r"] = 1;
  CHECK_FALSE(replay_noether(bad_data, g, Q));
  auto s3 = catalog_group("S3");
  auto w = noether_verdict(s3, Q);
  REQUIRE_FALSE(w.trace.empty());
  auto sub = w;
  sub.trace[0].sub.clear();
  CHECK_FALSE(replay_noether(sub, s3, Q));
}

TEST_CASE("torus verdicts") {
  auto c2 = catalog_group("C2");
  auto sign = sign_lattice(c2->trivial_subgroup());
  auto v = torus_verdict(sign);
  CHECK(v.answer == Answer::Yes);
  CHECK(replay_torus(v, sign));
  auto lq = lenstra_lattice(3).M;
  auto w = torus_verdict(lq);
  CHECK(w.answer == Answer::No);
  CHECK(replay_torus(w, lq));
  CHECK_FALSE(replay_torus(w, sign));
  CHECK(torus_verdict(regular_lattice(catalog_group("S3"))).answer == Answer::Yes);
}

TEST_CASE("multiplicative verdicts") {
  auto Q = FieldDescriptor::rationals();
  auto C = FieldDescriptor::complex();
  auto c8 = regular_lattice(catalog_group("C8"));
  auto v = multiplicative_verdict(c8, Q);
  CHECK(v.answer == Answer::No);
  CHECK(replay_multiplicative(v, c8, Q));
  auto c3 = catalog_group("C3");
  for (const auto& m : {trivial_lattice(c3), regular_lattice(c3), augmentation_ideal(c3)}) {
    auto w = multiplicative_verdict(m, Q);
    CHECK(w.answer == Answer::Yes);
    CHECK(replay_multiplicative(w, m, Q));
  }
  auto lq = lenstra_lattice(3).M;  // over U(8), a Klein four-group
  auto u = multiplicative_verdict(lq, C);
  CHECK(u.answer == Answer::Unknown);
  CHECK(replay_multiplicative(u, lq, C));
  auto s3 = regular_lattice(catalog_group("S3"));
  auto z = multiplicative_verdict(s3, Q);
  CHECK(z.answer == Answer::Yes);
  CHECK(replay_multiplicative(z, s3, Q));
}

TEST_CASE("monomial verdicts") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    auto v = monomial_universal_verdict(g);
    CHECK(v.answer == (all_sylow_cyclic(*g) ? Answer::Yes : Answer::No));
    CHECK(replay_monomial_universal(v, g));
  }
  CHECK(monomial_universal_verdict(catalog_group("S3")).answer == Answer::Yes);
  CHECK(monomial_universal_verdict(catalog_group("V4")).answer == Answer::No);
  CHECK(monomial_universal_verdict(catalog_group("C12")).answer == Answer::Yes);

  auto s3 = catalog_group("S3");
  MonomialAction any(regular_lattice(s3), 1, std::vector<IntVector>(s3->generators().size(), IntVector(6)));
  auto a = monomial_instance_verdict(any, FieldDescriptor::complex());
  CHECK(a.answer == Answer::Yes);
  CHECK(replay_monomial_instance(a, any, FieldDescriptor::complex()));

  auto Q = FieldDescriptor::rationals();
  auto c3 = catalog_group("C3");
  MonomialAction pure(regular_lattice(c3), 1, {IntVector(3)});
  auto b = monomial_instance_verdict(pure, Q);
  CHECK(b.answer == Answer::Yes);
  CHECK(cites(b, "Theorem 6.3"));
  CHECK(replay_monomial_instance(b, pure, Q));

  // x -> zeta_4 x^-1 needs zeta_4, which Q lacks
  auto c2 = catalog_group("C2");
  MonomialAction twisted(GLattice(c2, 1, {1}, {IntMatrix{{-1}}}), 4, {{1}});
  CHECK_THROWS_AS(monomial_instance_verdict(twisted, Q), InputError);
  auto t = monomial_instance_verdict(twisted, FieldDescriptor::complex());
  CHECK(t.answer == Answer::Yes);
}

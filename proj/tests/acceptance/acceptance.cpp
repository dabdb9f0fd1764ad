// One PASS/FAIL line per acceptance criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "rrat/documents.hpp"
#include "rrat/errors.hpp"
#include "rrat/random.hpp"

using namespace rrat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream ss;
    ss << "took " << secs << " s, limit " << limit_s << " s";
    o.fail(ss.str());
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d  %-48s %8.2f s%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<GroupPtr> catalog_up_to(std::size_t n) {
  std::vector<GroupPtr> out;
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() <= n) out.push_back(g);
  }
  return out;
}

// Every Yes carries a section that re-verifies; counted for criterion 5.
std::size_t witnesses_checked = 0;
bool witnessed(const InvertibilityDecision& d) {
  if (!d.invertible) return true;
  ++witnesses_checked;
  return d.witness && verify_section(d.cover, d.witness->matrix) && d.witness->is_equivariant();
}

}  // namespace

int main() {
  criterion(1, "Lenstra lattices: cohomology of I_q", 10, [](Outcome& o) {
    for (unsigned n : {3u, 4u}) {
      auto data = lenstra_lattice(n);
      auto prof = profile(data.M, SubgroupMode::All);
      std::size_t klein = 0;
      for (const auto& e : prof.entries) {
        if (!e.h1.is_trivial()) o.fail("H^1 nontrivial at a subgroup of order " + std::to_string(e.subgroup.order()));
        if (e.subgroup.order() == 4 && !e.subgroup.is_cyclic()) {
          ++klein;
          if (e.h_minus1 != AbelianInvariants::from_cyclic_orders({Integer(2)}))
            o.fail("H^-1 at C2 x C2 is " + e.h_minus1.to_string());
        }
      }
      if (klein != 1) o.fail("expected one C2 x C2 subgroup, found " + std::to_string(klein));
      if (profile_json(prof)["summary"] != "coflabby, not flabby") o.fail("profile summary for q = " + std::to_string(data.q));
    }
  });

  criterion(2, "Lenstra lattices: [I_q]^fl not invertible", 60, [](Outcome& o) {
    for (unsigned n : {3u, 4u}) {
      auto m = lenstra_lattice(n).M;
      if (is_invertible(flabby_resolution(m).F).invertible) o.fail("F invertible for n = " + std::to_string(n));
      auto v = torus_verdict(m);
      if (v.answer != Answer::No) o.fail("torus verdict not No for n = " + std::to_string(n));
      if (!replay_torus(v, m)) o.fail("torus trace does not replay");
    }
  });

  criterion(3, "Permutation lattices are flabby and coflabby", 60, [](Outcome& o) {
    Rng rng(3003);
    for (const auto& g : catalog_up_to(16))
      for (int t = 0; t < 20; ++t) {
        auto p = random_permutation_lattice(g, rng);
        auto prof = profile(p, SubgroupMode::All);
        if (!prof.is_flabby || !prof.is_coflabby) o.fail("permutation lattice over " + g->name());
      }
  });

  criterion(4, "Endo-Miyata: Z-groups have invertible [M]^fl", 300, [](Outcome& o) {
    Rng rng(4004);
    std::vector<std::string> names{"S3", "C6"};
    for (int n = 2; n <= 12; ++n) names.push_back("C" + std::to_string(n));
    for (const auto& name : names) {
      auto g = catalog_group(name);
      for (int t = 0; t < 50; ++t) {
        auto m = random_lattice(g, rng, 5);
        auto d = is_invertible(flabby_resolution(m).F);
        if (!d.invertible) o.fail("non-invertible class over " + name);
        if (!witnessed(d)) o.fail("witness failed over " + name);
      }
    }
  });

  criterion(5, "Invertibility decisions carry verified witnesses", 60, [](Outcome& o) {
    auto c2 = catalog_group("C2");
    if (is_invertible(sign_lattice(c2->trivial_subgroup())).invertible) o.fail("sign lattice over C2 decided Yes");
    Rng rng(5005);
    for (const auto& g : catalog_up_to(16)) {
      for (auto m : {trivial_lattice(g), regular_lattice(g), random_permutation_lattice(g, rng)}) {
        auto d = is_invertible(m);
        if (!d.invertible) o.fail("permutation or trivial lattice decided No over " + g->name());
        if (!witnessed(d)) o.fail("witness failed over " + g->name());
      }
      for (int t = 0; t < 5; ++t)
        if (!witnessed(is_invertible(random_lattice(g, rng)))) o.fail("witness failed over " + g->name());
    }
    if (witnesses_checked == 0) o.fail("no witnesses seen");
  });

  criterion(6, "Noether verdict table and trace replay", 120, [](Outcome& o) {
    auto Q = FieldDescriptor::rationals();
    auto C = FieldDescriptor::complex();
    auto expect = [&](const std::string& name, const FieldDescriptor& k, Answer a, const std::string& cite) {
      auto g = catalog_group(name);
      auto v = noether_verdict(g, k);
      if (v.answer != a) o.fail(name + " over " + k.name + " gave " + to_string(v.answer));
      bool cited = cite.empty();
      for (const auto& s : v.trace) cited = cited || s.cite == cite;
      if (!cited) o.fail(name + " over " + k.name + " does not cite " + cite);
      if (!replay_noether(v, g, k)) o.fail(name + " over " + k.name + " does not replay");
    };
    expect("C8", Q, Answer::No, "Theorem 2.9");
    expect("C47", Q, Answer::Yes, "Theorem 3.7");
    for (const auto& g : catalog_up_to(16))
      if (g->is_abelian()) expect(g->name(), C, Answer::Yes, "Theorem 3.7");
    for (const char* name : {"S3", "D8", "Q8"}) expect(name, C, Answer::Yes, "Theorem 5.10");
    // G/H cyclic of order 8 over Q
    for (const char* name : {"C8", "C16", "C2xC8", "C8xC3"}) expect(name, Q, Answer::No, "Remark after Corollary 2.10");
    for (const auto& name : catalog_names())
      for (const auto& k : {Q, C}) {
        auto g = catalog_group(name);
        if (!replay_noether(noether_verdict(g, k), g, k)) o.fail(name + " over " + k.name + " does not replay");
      }
  });

  criterion(7, "Fingerprint invariance under adding Z[G/H]", 300, [](Outcome& o) {
    Rng rng(7007);
    auto groups = catalog_up_to(16);
    for (int t = 0; t < 20; ++t) {
      const auto& g = groups[t % groups.size()];
      auto m = random_lattice(g, rng);
      auto f = class_fingerprint(m);
      for (const auto& h : g->subgroups())
        if (class_fingerprint(direct_sum(m, permutation_lattice(g, {h}))) != f)
          o.fail("fingerprint changed over " + g->name() + " adding Z[G/H], |H| = " + std::to_string(h.order()));
    }
  });

  criterion(8, "Cyclic periodicity of Tate cohomology", 300, [](Outcome& o) {
    Rng rng(8008);
    for (const auto& name : catalog_names()) {
      auto g = catalog_group(name);
      for (int t = 0; t < 20; ++t) {
        auto m = random_lattice(g, rng);
        for (const auto& h : g->subgroups())
          if (h.is_cyclic() && tate_minus1(h, m) != h1(h, m)) o.fail("periodicity fails over " + name);
      }
    }
  });

  criterion(9, "Monomial extension classes and the Sylow criterion", 60, [](Outcome& o) {
    auto c2 = catalog_group("C2");
    auto rank_one = [&](long a) { return GLattice(c2, 1, {1}, {IntMatrix{{a}}}); };
    struct Case {
      std::string label;
      MonomialAction action;
      bool at_d, stably;
    };
    std::vector<Case> cases{{"purely monomial", MonomialAction(rank_one(-1), 4, {{0}}), true, true},
                            {"x -> zeta_4 x^-1", MonomialAction(rank_one(-1), 4, {{1}}), false, true},
                            {"x -> -x", MonomialAction(rank_one(1), 2, {{1}}), false, true}};
    for (const auto& c : cases) {
      auto e = extension_class(c.action);
      if (e.vanishes_at_d != c.at_d || e.vanishes_stably != c.stably) {
        std::ostringstream ss;
        ss << c.label << ": vanishes_at_d = " << e.vanishes_at_d << ", vanishes_stably = " << e.vanishes_stably
           << " (expected " << c.at_d << ", " << c.stably << ")";
        o.fail(ss.str());
      }
    }
    for (const auto& name : catalog_names()) {
      auto g = catalog_group(name);
      auto v = monomial_universal_verdict(g);
      if ((v.answer == Answer::Yes) != all_sylow_cyclic(*g)) o.fail("universal verdict disagrees over " + name);
      if (!replay_monomial_universal(v, g)) o.fail("universal verdict does not replay over " + name);
    }
  });

  criterion(10, "Integer linear algebra randomized suite", 120, [](Outcome& o) {
    Rng rng(1010);
    auto entry = [&](long b) { return static_cast<long>(pick(rng, static_cast<std::size_t>(2 * b + 1))) - b; };
    for (int t = 0; t < 1000; ++t) {
      const std::size_t r = 1 + pick(rng, 6), c = 1 + pick(rng, 6);
      IntMatrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = t % 10 == 0 ? entry(1000000) : entry(9);
      auto s = smith_normal_form(a);
      if (s.U * a * s.V != s.D) o.fail("U A V != D");
      if (!is_unimodular(s.U) || !is_unimodular(s.V)) o.fail("transform not unimodular");
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j && sgn(s.D(i, j)) != 0) o.fail("D not diagonal");
      const std::size_t k = std::min(r, c);
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(s.D(i, i)) < 0) o.fail("negative divisor");
        if (i + 1 < k) {
          const Integer &x = s.D(i, i), &y = s.D(i + 1, i + 1);
          if (sgn(x) == 0 ? sgn(y) != 0 : y % x != 0) o.fail("divisor chain broken");
        }
      }
    }
    for (int t = 0; t < 100; ++t) {
      const std::size_t r = 1 + pick(rng, 3), c = 1 + pick(rng, 3);
      IntMatrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(4);
      IntVector b(r);
      for (auto& x : b) x = entry(6);
      // brute force over the box [-6, 6]^c
      bool found = false;
      std::vector<long> x(c, -6);
      while (!found) {
        IntVector xv(x.begin(), x.end());
        found = a * xv == b;
        std::size_t i = 0;
        while (i < c && ++x[i] > 6) x[i++] = -6;
        if (i == c) break;
      }
      auto sol = solve_integer(a, b);
      if (sol && a * *sol != b) o.fail("solve_integer returned a non-solution");
      if (found && !sol) o.fail("solve_integer missed a solution");
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

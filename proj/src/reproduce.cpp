#include "rrat/reproduce.hpp"

#include "rrat/documents.hpp"
#include "rrat/random.hpp"

namespace rrat {

namespace {

struct Checks {
  json list = json::array();
  bool ok = true;
  void add(const std::string& name, const json& expected, const json& observed) {
    const bool pass = expected == observed;
    ok = ok && pass;
    list.push_back(json{{"check", name}, {"expected", expected}, {"observed", observed}, {"pass", pass}});
  }
};

}  // namespace

json reproduce_voskresenskii(unsigned n) {
  auto data = lenstra_lattice(n);
  const auto& m = data.M;
  const bool bad = n >= 3;
  Checks c;

  auto prof = profile(m, SubgroupMode::All);
  bool h1_trivial = true;
  std::vector<Subgroup> klein;
  json at_klein;
  for (const auto& e : prof.entries) {
    h1_trivial = h1_trivial && e.h1.is_trivial();
    if (e.subgroup.order() == 4 && !e.subgroup.is_cyclic()) {
      klein.push_back(e.subgroup);
      at_klein = invariants_json(e.h_minus1);
    }
  }
  c.add("H^1 trivial for every subgroup", true, h1_trivial);
  if (bad) {
    c.add("subgroups isomorphic to C2 x C2", 1, klein.size());
    c.add("H^-1 at the C2 x C2 subgroup", json::array({2}), at_klein);
  }
  c.add("coflabby", true, prof.is_coflabby);
  c.add("flabby", !bad, prof.is_flabby);

  auto res = flabby_resolution(m);
  auto dec = is_invertible(res.F);
  c.add("[I_q]^fl invertible", !bad, dec.invertible);
  auto tv = torus_verdict(m);
  c.add("torus verdict", bad ? "No" : "Yes", to_string(tv.answer));
  c.add("torus trace replays", true, replay_torus(tv, m));

  return json{{"suite", "voskresenskii"},
              {"n", n},
              {"q", data.q},
              {"group", data.pi->name()},
              {"rank_I_q", m.rank()},
              {"rank_P", res.P.rank()},
              {"rank_F", res.F.rank()},
              {"profile", profile_json(prof)},
              {"torus_verdict", tv.to_json()},
              {"notes", json::array({"the coordinate y_0 splits off as one rational parameter and is not part of I_q"})},
              {"checks", c.list},
              {"passed", c.ok}};
}

json reproduce_endo_miyata(std::size_t max_order, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  json groups = json::array();
  bool ok = true;
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    if (g->order() > max_order || g->order() < 2 || !all_sylow_cyclic(*g)) continue;
    std::size_t invertible = 0;
    json failures = json::array();
    for (std::size_t t = 0; t < trials; ++t) {
      auto m = random_lattice(g, rng);
      if (is_invertible(flabby_resolution(m).F).invertible) ++invertible;
      else failures.push_back(lattice_json(m));
    }
    ok = ok && invertible == trials;
    groups.push_back(json{{"group", name}, {"order", g->order()}, {"trials", trials}, {"invertible", invertible},
                          {"failures", failures}});
  }
  return json{{"suite", "endo-miyata"}, {"max_order", max_order}, {"trials", trials}, {"seed", seed},
              {"groups", groups}, {"passed", ok}};
}

}  // namespace rrat

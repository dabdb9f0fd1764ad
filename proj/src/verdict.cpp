#include "rrat/verdict.hpp"

#include <map>
#include <numeric>

#include "rrat/errors.hpp"
#include "rrat/resolutions.hpp"

namespace rrat {

using nlohmann::json;

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    default: return "Unknown";
  }
}

Answer answer_from_string(const std::string& s) {
  if (s == "Yes") return Answer::Yes;
  if (s == "No") return Answer::No;
  if (s == "Unknown") return Answer::Unknown;
  throw InputError("unknown verdict answer '" + s + "'");
}

json Verdict::to_json() const {
  json steps = json::array();
  for (const auto& s : trace) {
    json j{{"rule", s.rule}, {"cite", s.cite}, {"answer", to_string(s.answer)},
           {"premises", s.premises}, {"data", s.data}};
    json sub = json::array();
    for (const auto& v : s.sub) sub.push_back(v.to_json());
    j["sub"] = sub;
    steps.push_back(std::move(j));
  }
  return json{{"question", question}, {"answer", to_string(answer)}, {"trace", steps},
              {"implications", implications}};
}

Verdict Verdict::from_json(const json& j) {
  try {
    Verdict v;
    v.question = j.at("question").get<std::string>();
    v.answer = answer_from_string(j.at("answer").get<std::string>());
    for (const auto& s : j.at("trace")) {
      TraceStep t;
      t.rule = s.at("rule").get<std::string>();
      t.cite = s.at("cite").get<std::string>();
      t.answer = answer_from_string(s.value("answer", std::string("Unknown")));
      t.premises = s.value("premises", std::vector<std::string>{});
      t.data = s.value("data", json::object());
      if (s.contains("sub"))
        for (const auto& x : s.at("sub")) t.sub.push_back(from_json(x));
      v.trace.push_back(std::move(t));
    }
    v.implications = j.value("implications", std::vector<std::string>{});
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed verdict document: ") + e.what());
  }
}

namespace {

// ---- shared premise checks (used by evaluation and by replay) ----

std::optional<unsigned> log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  unsigned e = 0;
  while ((std::size_t{1} << e) < n) ++e;
  return e;
}

unsigned two_adic(std::size_t n) {
  unsigned r = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++r;
  }
  return r;
}

json members_json(const Subgroup& h) { return json(h.members()); }

Subgroup subgroup_from(const FiniteGroup& g, const json& j) {
  return g.make_subgroup(j.get<std::vector<Element>>());
}

bool trivially_meets(const Subgroup& a, const Subgroup& b) {
  for (Element x : a.members())
    if (x != 0 && b.contains(x)) return false;
  return true;
}

// G/H cyclic of order 2^n with H normal.
bool two_power_cyclic_quotient(const Subgroup& h, unsigned n) {
  const auto& g = *h.parent();
  return h.is_normal() && g.order() == h.order() << n && quotient_is_cyclic(h);
}

// tau of order 2^n meeting H trivially, so G = H x| <tau>.
bool splits_by(const Subgroup& h, Element tau, unsigned n) {
  const auto& g = *h.parent();
  if (tau >= g.order() || g.element_order(tau) != std::size_t{1} << n) return false;
  return trivially_meets(g.generated({tau}), h);
}

bool is_complement(const Subgroup& n, const Subgroup& g0) {
  return n.is_normal() && n.order() * g0.order() == n.parent()->order() && trivially_meets(n, g0);
}

bool is_direct_decomposition(const Subgroup& a, const Subgroup& b) {
  return a.is_normal() && is_complement(b, a);
}

bool abelian_cyclic_witness(const FiniteGroup& g, const Subgroup& h, Element tau, std::size_t e) {
  if (!h.is_normal() || !h.is_abelian() || tau >= g.order()) return false;
  std::vector<Element> gens = h.generators();
  gens.push_back(tau);
  if (g.closure(gens).size() != g.order()) return false;
  return e == std::lcm(h.exponent(), g.element_order(tau));
}

std::optional<std::size_t> exponent_p_group_prime(const FiniteGroup& g) {
  if (g.is_abelian()) return std::nullopt;
  auto f = factorize(g.order());
  if (f.size() != 1 || (f[0].second != 3 && f[0].second != 4)) return std::nullopt;
  if (g.exponent() != f[0].first) return std::nullopt;
  return f[0].first;
}

std::optional<Subgroup> normal_of_prime_order(const FiniteGroup& g, unsigned long p) {
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != p) continue;
    Subgroup s = g.generated({x});
    if (s.is_normal()) return s;
  }
  return std::nullopt;
}

GroupPtr group_of(const Subgroup& h) { return h.is_whole() ? h.parent() : subgroup_as_group(h).group; }

Answer combine(const std::vector<TraceStep>& steps) {
  bool yes = false, no = false;
  for (const auto& s : steps) {
    yes = yes || s.answer == Answer::Yes;
    no = no || s.answer == Answer::No;
  }
  if (yes && no) throw InternalError("verdict rules disagree");
  return no ? Answer::No : yes ? Answer::Yes : Answer::Unknown;
}

std::vector<std::string> noether_implications(Answer a, const FieldDescriptor& k) {
  if (!k.infinite) return {};
  if (a == Answer::Yes)
    return {"a generic G-Galois extension over k exists (Theorem 1.2)",
            "a generic G-polynomial over k exists (Theorem 1.2)",
            "the unramified Brauer group of k(G) over k equals Br(k) (Theorem 3.2)"};
  if (a == Answer::No) return {"there is no generic G-Galois extension over k (Theorem 1.2)"};
  return {};
}

// ---- noether engine ----

class Engine {
 public:
  Engine(const FieldDescriptor& k, const VerdictOptions& opt) : k_(k), opt_(opt) {}

  Verdict noether(const GroupPtr& gp) {
    const std::string key = gp->canonical_key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Verdict v = evaluate(gp);
    memo_.emplace(key, v);
    return v;
  }

 private:
  bool searchable(const FiniteGroup& g) const { return g.order() <= opt_.max_search_order; }

  std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) const {
    std::vector<Subgroup> out;
    if (!searchable(g)) {
      out.push_back(g.trivial_subgroup());
      return out;
    }
    for (const auto& h : g.subgroups())
      if (h.is_normal()) out.push_back(h);
    return out;
  }

  Verdict evaluate(const GroupPtr& gp) {
    const auto& g = *gp;
    Verdict v;
    v.question = "noether";
    TraceStep r0{"R0", "Definition 1.1", Answer::Yes, {"G is trivial, so k(G) = k"}, json::object(), {}};
    if (g.order() == 1 && !k_.infinite) {
      v.answer = Answer::Yes;
      v.trace.push_back(std::move(r0));
      return v;
    }
    std::vector<TraceStep> steps;

    // R1: char p and a normal C_p
    if (k_.characteristic != 0) {
      if (auto n = normal_of_prime_order(g, k_.characteristic)) {
        auto q = quotient_group(*n);
        Verdict sub = noether(q.group);
        steps.push_back({"R1", "Theorem 3.6", sub.answer,
                         {"char k = p with a normal subgroup N of order p",
                          "k(G) is rational over k(G/N), so both agree (Lemma 3.4)"},
                         json{{"p", k_.characteristic}, {"N", members_json(*n)}},
                         {sub}});
      }
    }

    std::vector<TraceStep> no_steps, yes_steps;
    if (g.order() == 1) yes_steps.push_back(std::move(r0));
    if (k_.infinite) {
      // R2
      if (g.is_abelian()) {
        const unsigned r = two_adic(g.exponent());
        Answer a = Answer::Unknown;
        std::string why;
        if (k_.characteristic == 2) {
          a = Answer::Yes;
          why = "char k = 2";
        } else {
          Tri c = k_.cyclotomic_2power_cyclic(r);
          if (c == Tri::Yes) a = Answer::Yes;
          if (c == Tri::No) a = Answer::No;
          why = std::string("k(zeta_2^r)/k cyclic: ") + to_string(c);
        }
        if (a != Answer::Unknown) {
          TraceStep s{"R2", "Theorem 3.7", a,
                      {"G abelian of exponent " + std::to_string(g.exponent()) + " = 2^" + std::to_string(r) + " * odd",
                       why},
                      json{{"exponent", g.exponent()}, {"r", r}},
                      {}};
          (a == Answer::No ? no_steps : yes_steps).push_back(std::move(s));
        }
      }

      // R3: 2-power cyclic quotients
      if (k_.characteristic != 2) {
        bool general = false, sonn = false;
        for (const auto& h : normal_subgroups(g)) {
          auto n = log2_exact(g.order() / h.order());
          if (!n || *n == 0 || !quotient_is_cyclic(h)) continue;
          if (!general && k_.cyclotomic_2power_cyclic(*n) == Tri::No) {
            for (Element t = 0; t < g.order(); ++t) {
              if (!splits_by(h, t, *n)) continue;
              general = true;
              no_steps.push_back({"R3", h.is_trivial() ? "Theorem 2.9" : "Corollary 2.10", Answer::No,
                                  {"G = H x| C_2^" + std::to_string(*n) + " with H normal",
                                   "k(zeta_2^" + std::to_string(*n) + ")/k is not cyclic", "char k != 2"},
                                  json{{"clause", "split"}, {"H", members_json(h)}, {"n", *n}, {"tau", t}},
                                  {}});
              break;
            }
          }
          if (!sonn && k_.is_rationals && *n >= 3) {
            sonn = true;
            no_steps.push_back({"R3", "Remark after Corollary 2.10", Answer::No,
                                {"k = Q", "G/H cyclic of order 2^" + std::to_string(*n) + " with n >= 3"},
                                json{{"clause", "rationals"}, {"H", members_json(h)}, {"n", *n}},
                                {}});
          }
          if (general && (sonn || !k_.is_rationals)) break;
        }
      }

      // abelian groups decided by R2 need no decomposition search
      const bool settled = g.is_abelian() && !(no_steps.empty() && yes_steps.empty());

      // R7
      if (searchable(g) && !settled) {
        bool fired = false;
        for (const auto& n : normal_subgroups(g)) {
          if (n.is_trivial() || n.is_whole()) continue;
          for (const auto& g0 : g.subgroups()) {
            if (g0.order() * n.order() != g.order() || !is_complement(n, g0)) continue;
            Verdict sub = noether(group_of(g0));
            if (sub.answer != Answer::No) continue;
            no_steps.push_back({"R7", "Theorem 3.5", Answer::No,
                                {"G = N x| G0", "k(G0) is not retract k-rational"},
                                json{{"N", members_json(n)}, {"G0", members_json(g0)}},
                                {sub}});
            fired = true;
            break;
          }
          if (fired) break;
        }
      }

      // R4
      if (g.is_abelian() || searchable(g)) {
        if (auto w = abelian_normal_cyclic_quotient(g); w && k_.has_root_of_unity(w->e_prime) == Tri::Yes)
          yes_steps.push_back({"R4", "Theorem 5.10", Answer::Yes,
                               {"H abelian normal with G/H cyclic, generated by the image of tau",
                                "zeta_" + std::to_string(w->e_prime) + " in k, e' = lcm(exp H, ord tau)"},
                               json{{"H", members_json(w->h)}, {"tau", w->tau}, {"e_prime", w->e_prime}},
                               {}});
      }

      // R5
      if (auto p = exponent_p_group_prime(g))
        yes_steps.push_back({"R5", "Example 3.8", Answer::Yes,
                             {"non-abelian p-group of exponent p and order p^3 or p^4"},
                             json{{"p", *p}},
                             {}});

      // R8
      if (searchable(g) && !settled) {
        bool fired = false;
        for (const auto& n : normal_subgroups(g)) {
          if (n.is_trivial() || n.is_whole() || !n.is_abelian()) continue;
          for (const auto& g0 : g.subgroups()) {
            if (g0.order() * n.order() != g.order() || std::gcd(n.order(), g0.order()) != 1 ||
                !is_complement(n, g0))
              continue;
            Verdict vn = noether(group_of(n));
            if (vn.answer != Answer::Yes) break;
            Verdict v0 = noether(group_of(g0));
            if (v0.answer != Answer::Yes) continue;
            yes_steps.push_back({"R8", "Theorem 3.5", Answer::Yes,
                                 {"G = N x| G0 with N abelian and gcd(|N|, |G0|) = 1",
                                  "k(N) and k(G0) are retract k-rational"},
                                 json{{"N", members_json(n)}, {"G0", members_json(g0)}},
                                 {vn, v0}});
            fired = true;
            break;
          }
          if (fired) break;
        }
      }

      // R6
      if (searchable(g) && !settled) {
        auto normals = normal_subgroups(g);
        for (std::size_t i = 0; i < normals.size(); ++i) {
          const auto& a = normals[i];
          if (a.is_trivial() || a.is_whole()) continue;
          bool done = false;
          for (std::size_t j = i + 1; j < normals.size() && !done; ++j) {
            const auto& b = normals[j];
            if (a.order() * b.order() != g.order() || !is_direct_decomposition(a, b)) continue;
            Verdict va = noether(group_of(a));
            Verdict vb = noether(group_of(b));
            Answer ans = Answer::Unknown;
            if (va.answer == Answer::No || vb.answer == Answer::No) ans = Answer::No;
            else if (va.answer == Answer::Yes && vb.answer == Answer::Yes) ans = Answer::Yes;
            if (ans == Answer::Unknown) continue;
            (ans == Answer::No ? no_steps : yes_steps)
                .push_back({"R6", "Lemma 3.4", ans,
                            {"G = G1 x G2", "k(G) is retract k-rational iff k(G1) and k(G2) are"},
                            json{{"G1", members_json(a)}, {"G2", members_json(b)}},
                            {va, vb}});
            done = true;
          }
          if (done) break;
        }
      }
    }

    for (auto& s : no_steps) steps.push_back(std::move(s));
    for (auto& s : yes_steps) steps.push_back(std::move(s));
    v.answer = combine(steps);
    v.trace = std::move(steps);
    v.implications = noether_implications(v.answer, k_);
    return v;
  }

  FieldDescriptor k_;
  VerdictOptions opt_;
  std::map<std::string, Verdict> memo_;
};

// ---- replay ----

bool replay_noether_step(const TraceStep& s, const GroupPtr& gp, const FieldDescriptor& k) {
  const auto& g = *gp;
  const auto& d = s.data;
  auto sub_ok = [&](std::size_t i, const GroupPtr& h) {
    return i < s.sub.size() && replay_noether(s.sub[i], h, k);
  };
  if (s.rule == "R0") return g.order() == 1 && s.answer == Answer::Yes;
  if (s.rule == "R1") {
    auto n = subgroup_from(g, d.at("N"));
    unsigned long p = d.at("p").get<unsigned long>();
    if (p != k.characteristic || n.order() != p || !n.is_normal()) return false;
    return sub_ok(0, quotient_group(n).group) && s.sub[0].answer == s.answer;
  }
  if (!k.infinite) return false;
  if (s.rule == "R2") {
    if (!g.is_abelian() || d.at("exponent").get<std::size_t>() != g.exponent()) return false;
    const unsigned r = d.at("r").get<unsigned>();
    if (r != two_adic(g.exponent())) return false;
    if (k.characteristic == 2) return s.answer == Answer::Yes;
    Tri c = k.cyclotomic_2power_cyclic(r);
    return (c == Tri::Yes && s.answer == Answer::Yes) || (c == Tri::No && s.answer == Answer::No);
  }
  if (s.rule == "R3") {
    auto h = subgroup_from(g, d.at("H"));
    const unsigned n = d.at("n").get<unsigned>();
    if (s.answer != Answer::No || k.characteristic == 2 || n == 0 || !two_power_cyclic_quotient(h, n)) return false;
    if (d.at("clause") == "rationals") return k.is_rationals && n >= 3;
    return k.cyclotomic_2power_cyclic(n) == Tri::No && splits_by(h, d.at("tau").get<Element>(), n) &&
           s.cite == (h.is_trivial() ? "Theorem 2.9" : "Corollary 2.10");
  }
  if (s.rule == "R4") {
    auto h = subgroup_from(g, d.at("H"));
    const std::size_t e = d.at("e_prime").get<std::size_t>();
    return s.answer == Answer::Yes && abelian_cyclic_witness(g, h, d.at("tau").get<Element>(), e) &&
           k.has_root_of_unity(e) == Tri::Yes;
  }
  if (s.rule == "R5") {
    auto p = exponent_p_group_prime(g);
    return s.answer == Answer::Yes && p && *p == d.at("p").get<std::size_t>();
  }
  if (s.rule == "R6") {
    auto a = subgroup_from(g, d.at("G1"));
    auto b = subgroup_from(g, d.at("G2"));
    if (!is_direct_decomposition(a, b) || !sub_ok(0, group_of(a)) || !sub_ok(1, group_of(b))) return false;
    Answer x = s.sub[0].answer, y = s.sub[1].answer;
    if (s.answer == Answer::No) return x == Answer::No || y == Answer::No;
    return s.answer == Answer::Yes && x == Answer::Yes && y == Answer::Yes;
  }
  if (s.rule == "R7") {
    auto n = subgroup_from(g, d.at("N"));
    auto g0 = subgroup_from(g, d.at("G0"));
    return s.answer == Answer::No && !n.is_trivial() && is_complement(n, g0) && sub_ok(0, group_of(g0)) &&
           s.sub[0].answer == Answer::No;
  }
  if (s.rule == "R8") {
    auto n = subgroup_from(g, d.at("N"));
    auto g0 = subgroup_from(g, d.at("G0"));
    return s.answer == Answer::Yes && n.is_abelian() && std::gcd(n.order(), g0.order()) == 1 &&
           is_complement(n, g0) && sub_ok(0, group_of(n)) && sub_ok(1, group_of(g0)) &&
           s.sub[0].answer == Answer::Yes && s.sub[1].answer == Answer::Yes;
  }
  return false;
}

template <class F>
bool replay_steps(const Verdict& v, const std::string& question, F&& step_ok) {
  if (v.question != question) return false;
  try {
    for (const auto& s : v.trace)
      if (!step_ok(s)) return false;
    return combine(v.trace) == v.answer;
  } catch (const InputError&) {
    return false;
  } catch (const json::exception&) {
    return false;
  } catch (const InternalError&) {
    return false;
  }
}

// Faithful quotient of a lattice: (G/K, M over G/K); G itself when K = 1.
struct Faithful {
  Subgroup kernel;
  GroupPtr group;
  GLattice lattice;
};

Faithful faithful_quotient(const GLattice& m) {
  Faithful f{action_kernel(m), m.group(), m};
  if (!f.kernel.is_trivial()) {
    auto q = quotient_group(f.kernel);
    f.group = q.group;
    f.lattice = descend(m, q);
  }
  return f;
}

bool flabby_class_invertible(const GLattice& m) { return is_invertible(flabby_resolution(m).F).invertible; }

}  // namespace

Verdict noether_verdict(const GroupPtr& g, const FieldDescriptor& k, const VerdictOptions& opt) {
  Engine e(k, opt);
  return e.noether(g);
}

bool replay_noether(const Verdict& v, const GroupPtr& g, const FieldDescriptor& k) {
  return replay_steps(v, "noether", [&](const TraceStep& s) { return replay_noether_step(s, g, k); });
}

Verdict torus_verdict(const GLattice& m) {
  auto res = flabby_resolution(m);
  auto dec = is_invertible(res.F);
  Verdict v;
  v.question = "torus";
  v.answer = dec.invertible ? Answer::Yes : Answer::No;
  TraceStep s{"T1", "Theorem 2.8", v.answer, {}, json::object(), {}};
  s.premises.push_back("flabby resolution 0 -> M -> P -> F -> 0 with rank P = " + std::to_string(res.P.rank()) +
                       ", rank F = " + std::to_string(res.F.rank()));
  s.premises.push_back(dec.invertible ? "F is invertible: the cover of F splits (witness verified)"
                                      : "F is not invertible: the cover of F has no equivariant section");
  s.data = json{{"P_rank", res.P.rank()}, {"F_rank", res.F.rank()}, {"cover_rank", dec.cover.P.rank()},
                {"invertible", dec.invertible}};
  v.trace.push_back(std::move(s));
  if (v.answer == Answer::Yes)
    v.implications.push_back("the torus is retract rational, so its unramified Brauer group is Br(k) (Theorem 3.2)");
  return v;
}

bool replay_torus(const Verdict& v, const GLattice& m) {
  return replay_steps(v, "torus", [&](const TraceStep& s) {
    if (s.rule != "T1") return false;
    auto res = flabby_resolution(m);
    auto dec = is_invertible(res.F);
    if (dec.invertible && !verify_section(dec.cover, dec.witness->matrix)) return false;
    return s.data.at("P_rank").get<std::size_t>() == res.P.rank() &&
           s.data.at("F_rank").get<std::size_t>() == res.F.rank() &&
           s.data.at("invertible").get<bool>() == dec.invertible &&
           s.answer == (dec.invertible ? Answer::Yes : Answer::No);
  });
}

Verdict multiplicative_verdict(const GLattice& m, const FieldDescriptor& k, const VerdictOptions& opt) {
  Engine e(k, opt);
  const auto& g = *m.group();
  auto f = faithful_quotient(m);

  json kernel{{"kernel", members_json(f.kernel)}};
  const std::string reduce = "M is a faithful lattice over G/K, K the action kernel of order " +
                             std::to_string(f.kernel.order());
  Verdict v;
  v.question = "multiplicative";
  if (f.group->is_cyclic()) {
    Verdict sub = e.noether(f.group);
    v.trace.push_back({"M1", "Theorem 5.5", sub.answer,
                       {"G/K cyclic", reduce, "k(M)^G is retract k-rational iff k(G/K) is"}, kernel, {sub}});
  } else {
    if (zgroup_presentation(g)) {
      Verdict sub = e.noether(m.group());
      if (sub.answer == Answer::Yes)
        v.trace.push_back({"M2", "Theorem 5.7", Answer::Yes,
                           {"all Sylow subgroups of G are cyclic", "k(G) is retract k-rational"},
                           json::object(), {sub}});
    }
    Verdict sub = e.noether(f.group);
    if (sub.answer == Answer::No) {
      v.trace.push_back({"M3", "Theorem 5.3", Answer::No,
                         {reduce, "k(G/K) is not retract k-rational"}, kernel, {sub}});
    } else if (sub.answer == Answer::Yes && flabby_class_invertible(f.lattice)) {
      json d = kernel;
      d["flabby_class_invertible"] = true;
      v.trace.push_back({"M4", "Theorem 5.4", Answer::Yes,
                         {reduce, "[M]^fl is invertible", "k(G/K) is retract k-rational"}, d, {sub}});
    }
  }
  v.answer = combine(v.trace);
  return v;
}

bool replay_multiplicative(const Verdict& v, const GLattice& m, const FieldDescriptor& k) {
  return replay_steps(v, "multiplicative", [&](const TraceStep& s) {
    auto f = faithful_quotient(m);
    auto sub_ok = [&](const GroupPtr& h) { return s.sub.size() == 1 && replay_noether(s.sub[0], h, k); };
    if (s.rule == "M2")
      return zgroup_presentation(*m.group()).has_value() && sub_ok(m.group()) &&
             s.sub[0].answer == Answer::Yes && s.answer == Answer::Yes;
    if (s.data.at("kernel").get<std::vector<Element>>() != f.kernel.members() || !sub_ok(f.group)) return false;
    const Answer a = s.sub[0].answer;
    if (s.rule == "M1") return f.group->is_cyclic() && s.answer == a;
    if (s.rule == "M3") return a == Answer::No && s.answer == Answer::No;
    if (s.rule == "M4") return a == Answer::Yes && s.answer == Answer::Yes && flabby_class_invertible(f.lattice);
    return false;
  });
}

Verdict monomial_universal_verdict(const GroupPtr& g) {
  Verdict v;
  v.question = "monomial-universal";
  const bool cyc = all_sylow_cyclic(*g);
  v.answer = cyc ? Answer::Yes : Answer::No;
  json d{{"all_sylow_cyclic", cyc}};
  std::vector<std::string> premises{cyc ? "all Sylow subgroups of G are cyclic"
                                        : "some Sylow subgroup of G is not cyclic"};
  if (cyc)
    if (auto z = zgroup_presentation(*g)) {
      d["zgroup"] = json{{"m", z->m}, {"n", z->n}, {"r", z->r}, {"sigma", z->sigma}, {"tau", z->tau}};
      premises.push_back("metacyclic presentation with m = " + std::to_string(z->m) + ", n = " +
                         std::to_string(z->n) + ", r = " + std::to_string(z->r) + " (Theorem 5.6)");
      if (g->order() == 1) premises.push_back("trivial group taken as (m, n, r) = (1, 1, 1)");
    }
  v.trace.push_back({"U1", "Theorem 6.6", v.answer, premises, d, {}});
  if (cyc)
    v.implications.push_back(
        "the unramified Brauer group of C_alpha(M)^G over C vanishes for every G-lattice M and every alpha "
        "(Theorem 6.6)");
  else
    v.implications.push_back(
        "some monomial action of G over C has a fixed field that is not retract C-rational (Theorem 6.6)");
  return v;
}

bool replay_monomial_universal(const Verdict& v, const GroupPtr& g) {
  return replay_steps(v, "monomial-universal", [&](const TraceStep& s) {
    const bool cyc = all_sylow_cyclic(*g);
    if (s.rule != "U1" || s.data.at("all_sylow_cyclic").get<bool>() != cyc) return false;
    if (s.data.contains("zgroup")) {
      const auto& z = s.data.at("zgroup");
      ZGroupPresentation p{z.at("m").get<std::size_t>(), z.at("n").get<std::size_t>(), z.at("r").get<std::size_t>(),
                           z.at("sigma").get<Element>(), z.at("tau").get<Element>()};
      if (!verify_zgroup_presentation(*g, p)) return false;
    }
    return s.answer == (cyc ? Answer::Yes : Answer::No);
  });
}

namespace {

// Order of the root of unity actually used by the coefficients.
long coefficient_order(const MonomialAction& a) {
  long g = a.d();
  for (Element x = 0; x < a.lattice().group()->order(); ++x)
    for (const auto& c : a.coefficients(x)) g = std::gcd(g, c.get_si());
  return a.d() / g;
}

}  // namespace

Verdict monomial_instance_verdict(const MonomialAction& a, const FieldDescriptor& k, const VerdictOptions& opt) {
  const auto& m = a.lattice();
  const auto& gp = m.group();
  const long used = coefficient_order(a);
  if (k.has_root_of_unity(static_cast<std::size_t>(used)) == Tri::No)
    throw InputError("coefficients need zeta_" + std::to_string(used) + ", which is not in k");
  Verdict v;
  v.question = "monomial-instance";

  if (k.is_complex && all_sylow_cyclic(*gp)) {
    v.trace.push_back({"I1", "Theorem 6.6", Answer::Yes, {"k = C", "all Sylow subgroups of G are cyclic"},
                       json::object(), {}});
  } else {
    bool done = false;
    if (is_invertible(m).invertible && a.is_faithful()) {
      Verdict sub = noether_verdict(gp, k, opt);
      if (sub.answer == Answer::Yes) {
        v.trace.push_back({"I2", "Theorem 6.3", Answer::Yes,
                           {"M is invertible", "G acts faithfully on M_alpha", "k(G) is retract k-rational"},
                           json{{"invertible", true}, {"faithful", true}}, {sub}});
        done = true;
      }
    }
    if (!done) {
      auto e = extension_class(a);
      const std::size_t stable_order = static_cast<std::size_t>(a.d()) * gp->order();
      std::optional<std::string> how;
      if (e.vanishes_at_d) how = "rescaling by d-th roots of unity makes the action purely monomial";
      else if (e.vanishes_stably && k.has_root_of_unity(stable_order) == Tri::Yes)
        how = "rescaling by roots of unity of order d|G| (present in k) makes the action purely monomial";
      if (how) {
        Verdict sub = multiplicative_verdict(m, k, opt);
        v.trace.push_back({"I3", "Definition 2.1", sub.answer, {*how, "k_alpha(M)^G = k(M)^G after rescaling"},
                           json{{"vanishes_at_d", e.vanishes_at_d}, {"vanishes_stably", e.vanishes_stably}},
                           {sub}});
      }
    }
  }
  v.answer = combine(v.trace);
  return v;
}

bool replay_monomial_instance(const Verdict& v, const MonomialAction& a, const FieldDescriptor& k) {
  return replay_steps(v, "monomial-instance", [&](const TraceStep& s) {
    const auto& gp = a.lattice().group();
    if (s.rule == "I1") return k.is_complex && all_sylow_cyclic(*gp) && s.answer == Answer::Yes;
    if (s.rule == "I2")
      return s.sub.size() == 1 && is_invertible(a.lattice()).invertible && a.is_faithful() &&
             replay_noether(s.sub[0], gp, k) && s.sub[0].answer == Answer::Yes && s.answer == Answer::Yes;
    if (s.rule == "I3") {
      auto e = extension_class(a);
      const std::size_t stable_order = static_cast<std::size_t>(a.d()) * gp->order();
      const bool ok = e.vanishes_at_d || (e.vanishes_stably && k.has_root_of_unity(stable_order) == Tri::Yes);
      return ok && s.sub.size() == 1 && replay_multiplicative(s.sub[0], a.lattice(), k) &&
             s.sub[0].answer == s.answer;
    }
    return false;
  });
}

}  // namespace rrat

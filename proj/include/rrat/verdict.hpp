#pragma once

// Theorem-indexed rule engine for retract rationality questions.

#include <string>
#include <vector>

#include "json.hpp"
#include "rrat/fields.hpp"
#include "rrat/lattices.hpp"
#include "rrat/monomial.hpp"

namespace rrat {

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer a);
Answer answer_from_string(const std::string& s);

struct Verdict;

struct TraceStep {
  std::string rule;   // R0..R8, T1 (torus), M1.., U1 ...
  std::string cite;   // citation string, e.g. "Theorem 3.7"
  Answer answer = Answer::Unknown;
  std::vector<std::string> premises;
  nlohmann::json data = nlohmann::json::object();  // what replay re-checks
  std::vector<Verdict> sub;
};

struct Verdict {
  std::string question;  // noether, torus, multiplicative, monomial-universal, monomial-instance
  Answer answer = Answer::Unknown;
  std::vector<TraceStep> trace;
  std::vector<std::string> implications;

  nlohmann::json to_json() const;
  static Verdict from_json(const nlohmann::json& j);
};

struct VerdictOptions {
  std::size_t max_search_order = kDefaultMaxSubgroupOrder;  // subgroup searches above this are skipped
};

Verdict noether_verdict(const GroupPtr& g, const FieldDescriptor& k, const VerdictOptions& opt = {});
Verdict torus_verdict(const GLattice& m);
Verdict multiplicative_verdict(const GLattice& m, const FieldDescriptor& k, const VerdictOptions& opt = {});
Verdict monomial_universal_verdict(const GroupPtr& g);
Verdict monomial_instance_verdict(const MonomialAction& a, const FieldDescriptor& k,
                                  const VerdictOptions& opt = {});

// Re-verify every step's premises from its recorded data, recursing into
// sub-verdicts. False on the first step that does not check out.
bool replay_noether(const Verdict& v, const GroupPtr& g, const FieldDescriptor& k);
bool replay_torus(const Verdict& v, const GLattice& m);
bool replay_multiplicative(const Verdict& v, const GLattice& m, const FieldDescriptor& k);
bool replay_monomial_universal(const Verdict& v, const GroupPtr& g);
bool replay_monomial_instance(const Verdict& v, const MonomialAction& a, const FieldDescriptor& k);

}  // namespace rrat

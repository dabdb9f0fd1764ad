#pragma once

// Base fields described by the few facts the rules consult.

#include <cstddef>
#include <map>
#include <string>

#include "json.hpp"

namespace rrat {

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);
Tri tri_from_string(const std::string& s);

struct FieldDescriptor {
  std::string name;
  unsigned long characteristic = 0;
  bool infinite = true;
  bool is_rationals = false;
  bool is_complex = false;
  std::map<std::size_t, Tri> roots_of_unity;     // n -> zeta_n in k
  Tri roots_default = Tri::Unknown;
  std::map<unsigned, Tri> cyclotomic_2power;     // r -> k(zeta_{2^r})/k cyclic
  Tri cyclotomic_default = Tri::Unknown;

  Tri has_root_of_unity(std::size_t n) const;
  Tri cyclotomic_2power_cyclic(unsigned r) const;

  std::string key() const;  // canonical text, used for memo keys
  nlohmann::json to_json() const;
  static FieldDescriptor from_json(const nlohmann::json& j);

  static FieldDescriptor rationals();
  static FieldDescriptor complex();
};

// "Q", "C", or "custom:<path>" is handled by the caller; this accepts Q and C.
FieldDescriptor builtin_field(const std::string& name);

}  // namespace rrat

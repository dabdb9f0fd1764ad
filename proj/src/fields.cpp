#include "rrat/fields.hpp"

#include "rrat/errors.hpp"

namespace rrat {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

Tri tri_from_string(const std::string& s) {
  if (s == "yes" || s == "true") return Tri::Yes;
  if (s == "no" || s == "false") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  throw InputError("expected yes/no/unknown, got '" + s + "'");
}

Tri FieldDescriptor::has_root_of_unity(std::size_t n) const {
  if (n == 0) throw InputError("root of unity of order 0");
  if (n == 1) return Tri::Yes;
  if (characteristic != 0 && n % characteristic == 0) return Tri::No;
  if (is_complex) return Tri::Yes;
  if (is_rationals) return n <= 2 ? Tri::Yes : Tri::No;
  if (n == 2) return Tri::Yes;
  if (auto it = roots_of_unity.find(n); it != roots_of_unity.end()) return it->second;
  // zeta_m in k gives zeta_n for n | m; zeta_m missing for m | n rules zeta_n out
  for (auto [m, t] : roots_of_unity) {
    if (t == Tri::Yes && m % n == 0) return Tri::Yes;
    if (t == Tri::No && n % m == 0) return Tri::No;
  }
  return roots_default;
}

Tri FieldDescriptor::cyclotomic_2power_cyclic(unsigned r) const {
  if (r <= 2 || characteristic == 2 || is_complex) return Tri::Yes;
  if (is_rationals) return Tri::No;
  if (auto it = cyclotomic_2power.find(r); it != cyclotomic_2power.end()) return it->second;
  if (r < 20 && has_root_of_unity(std::size_t{1} << r) == Tri::Yes) return Tri::Yes;
  return cyclotomic_default;
}

nlohmann::json FieldDescriptor::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["characteristic"] = characteristic;
  j["infinite"] = infinite;
  if (is_rationals) j["builtin"] = "Q";
  if (is_complex) j["builtin"] = "C";
  nlohmann::json roots = nlohmann::json::object();
  for (auto [n, t] : roots_of_unity) roots[std::to_string(n)] = to_string(t);
  j["roots_of_unity"] = roots;
  j["roots_default"] = to_string(roots_default);
  nlohmann::json cyc = nlohmann::json::object();
  for (auto [r, t] : cyclotomic_2power) cyc[std::to_string(r)] = to_string(t);
  j["cyclotomic_2power_cyclic"] = cyc;
  j["cyclotomic_default"] = to_string(cyclotomic_default);
  return j;
}

std::string FieldDescriptor::key() const { return to_json().dump(); }

FieldDescriptor FieldDescriptor::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("field document must be an object");
    if (j.contains("builtin")) return builtin_field(j.at("builtin").get<std::string>());
    FieldDescriptor f;
    f.name = j.value("name", std::string("custom"));
    f.characteristic = j.value("characteristic", 0UL);
    if (f.characteristic == 1) throw InputError("characteristic must be 0 or a prime");
    for (unsigned long d = 2; d * d <= f.characteristic; ++d)
      if (f.characteristic % d == 0) throw InputError("characteristic must be 0 or a prime");
    f.infinite = j.value("infinite", true);
    if (j.contains("roots_of_unity"))
      for (const auto& [k, v] : j.at("roots_of_unity").items()) {
        std::size_t n = std::stoul(k);
        if (n == 0) throw InputError("root of unity of order 0");
        f.roots_of_unity[n] = tri_from_string(v.get<std::string>());
      }
    f.roots_default = tri_from_string(j.value("roots_default", std::string("unknown")));
    if (j.contains("cyclotomic_2power_cyclic"))
      for (const auto& [k, v] : j.at("cyclotomic_2power_cyclic").items())
        f.cyclotomic_2power[static_cast<unsigned>(std::stoul(k))] = tri_from_string(v.get<std::string>());
    f.cyclotomic_default = tri_from_string(j.value("cyclotomic_default", std::string("unknown")));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed field document: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed field document: non-numeric key");
  }
}

FieldDescriptor FieldDescriptor::rationals() {
  FieldDescriptor f;
  f.name = "Q";
  f.is_rationals = true;
  f.roots_default = Tri::No;
  f.cyclotomic_default = Tri::No;
  return f;
}

FieldDescriptor FieldDescriptor::complex() {
  FieldDescriptor f;
  f.name = "C";
  f.is_complex = true;
  f.roots_default = Tri::Yes;
  f.cyclotomic_default = Tri::Yes;
  return f;
}

FieldDescriptor builtin_field(const std::string& name) {
  if (name == "Q" || name == "RATIONALS") return FieldDescriptor::rationals();
  if (name == "C" || name == "COMPLEX") return FieldDescriptor::complex();
  throw InputError("unknown field '" + name + "'");
}

}  // namespace rrat

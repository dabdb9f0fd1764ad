#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rrat/documents.hpp"
#include "rrat/errors.hpp"
#include "rrat/reproduce.hpp"

using namespace rrat;

namespace {

struct Options {
  std::string group, lattice, action, field = "Q", subgroups = "prime-power", out;
  unsigned n = 3;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::string suite;
};

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

GroupPtr load_group(const Options& o) {
  if (o.group.empty()) throw InputError("--group is required");
  if (is_file(o.group)) return group_from_json(read_json_file(o.group), o.max_order);
  return catalog_group(o.group);
}

// A file, or one of lenstra:<n>, regular:<G>, trivial:<G>, augmentation:<G>.
GLattice load_lattice(const Options& o) {
  if (o.lattice.empty()) throw InputError("--lattice is required");
  if (is_file(o.lattice)) return lattice_from_json(read_json_file(o.lattice), o.max_order);
  auto colon = o.lattice.find(':');
  if (colon == std::string::npos) throw InputError("cannot read lattice '" + o.lattice + "'");
  const std::string kind = o.lattice.substr(0, colon), arg = o.lattice.substr(colon + 1);
  if (kind == "lenstra") {
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(arg));
    } catch (const std::exception&) {
      throw InputError("lenstra:<n> needs an integer");
    }
    return lenstra_lattice(n).M;
  }
  auto g = catalog_group(arg);
  if (kind == "regular") return regular_lattice(g);
  if (kind == "trivial") return trivial_lattice(g);
  if (kind == "augmentation") return augmentation_ideal(g);
  throw InputError("unknown lattice kind '" + kind + "'");
}

FieldDescriptor load_field(const Options& o) {
  if (o.field.rfind("custom:", 0) == 0) return FieldDescriptor::from_json(read_json_file(o.field.substr(7)));
  return builtin_field(o.field);
}

SubgroupMode load_mode(const Options& o) {
  if (o.subgroups == "prime-power") return SubgroupMode::PrimePower;
  if (o.subgroups == "all") return SubgroupMode::All;
  throw InputError("--subgroups must be prime-power or all");
}

void emit(const json& j, const Options& o) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = o.out + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
  }
  std::filesystem::rename(tmp, o.out);
}

json run_verb(const std::string& verb, const Options& o) {
  if (verb == "group-info") return group_info_json(*load_group(o));
  if (verb == "cohomology") return profile_json(profile(load_lattice(o), load_mode(o)));
  if (verb == "resolve") return resolution_json(flabby_resolution(load_lattice(o)));
  if (verb == "invertible") return decision_json(is_invertible(load_lattice(o)));
  if (verb == "verdict-noether") return noether_verdict(load_group(o), load_field(o)).to_json();
  if (verb == "verdict-torus") return torus_verdict(load_lattice(o)).to_json();
  if (verb == "verdict-multiplicative") return multiplicative_verdict(load_lattice(o), load_field(o)).to_json();
  if (verb == "verdict-monomial") {
    if (o.action.empty()) return monomial_universal_verdict(load_group(o)).to_json();
    auto a = monomial_from_json(read_json_file(o.action), o.max_order);
    json j = monomial_instance_verdict(a, load_field(o)).to_json();
    j["extension_class"] = extension_json(extension_class(a));
    return j;
  }
  if (verb == "reproduce") {
    if (o.suite == "voskresenskii") return reproduce_voskresenskii(o.n);
    if (o.suite == "endo-miyata") return reproduce_endo_miyata(o.max_order, o.trials, o.seed);
    throw InputError("reproduce needs voskresenskii or endo-miyata");
  }
  throw InputError("unknown verb '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retract rationality computations with G-lattices"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the JSON result to this file");
    sub->add_option("--max-order", o.max_order, "bound on group orders");
  };
  auto with_group = [&](CLI::App* sub) { sub->add_option("--group", o.group, "catalog name or group document"); };
  auto with_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "lattice document or lenstra:<n>, regular:<G>, trivial:<G>, augmentation:<G>");
  };
  auto with_field = [&](CLI::App* sub) { sub->add_option("--field", o.field, "Q, C or custom:<file>"); };

  std::vector<std::pair<std::string, CLI::App*>> verbs;
  auto verb = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    verbs.emplace_back(name, sub);
    return sub;
  };
  with_group(verb("group-info", "structure of a finite group"));
  auto* coh = verb("cohomology", "Tate cohomology profile of a lattice");
  with_lattice(coh);
  coh->add_option("--subgroups", o.subgroups, "prime-power or all");
  with_lattice(verb("resolve", "flabby resolution of a lattice"));
  with_lattice(verb("invertible", "decide whether a lattice is invertible"));
  auto* vn = verb("verdict-noether", "retract rationality of k(G)");
  with_group(vn);
  with_field(vn);
  with_lattice(verb("verdict-torus", "retract rationality of the torus with this character lattice"));
  auto* vm = verb("verdict-multiplicative", "retract rationality of k(M)^G");
  with_lattice(vm);
  with_field(vm);
  auto* vmo = verb("verdict-monomial", "monomial actions: universal (--group) or one action (--action)");
  with_group(vmo);
  vmo->add_option("--action", o.action, "monomial action document");
  with_field(vmo);
  auto* rep = verb("reproduce", "run a reproduction suite");
  rep->add_option("suite", o.suite, "voskresenskii or endo-miyata")->required();
  rep->add_option("--n", o.n, "q = 2^n for voskresenskii");
  rep->add_option("--trials", o.trials, "random lattices per group");
  rep->add_option("--seed", o.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (const auto& [name, sub] : verbs)
      if (sub->parsed()) {
        emit(run_verb(name, o), o);
        return 0;
      }
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

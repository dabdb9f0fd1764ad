#pragma once

// Finite groups given by multiplication tables, subgroup enumeration and the
// group-theoretic recognizers used by the verdict rules.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace rrat {

class FiniteGroup;
class Subgroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using Element = std::size_t;

inline constexpr std::size_t kDefaultMaxOrder = 1024;
inline constexpr std::size_t kDefaultMaxSubgroupOrder = 64;

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  using Table = std::vector<std::vector<Element>>;

  // Validates the table fully (closure, identity, inverses, associativity).
  // If the identity is not element 0 it is moved to the front and the other
  // elements keep their relative order.
  static GroupPtr from_table(const Table& table, std::string name = {},
                             std::size_t max_order = kDefaultMaxOrder);

  // Generators are 1-based image lists of degree `degree`; the group is their
  // closure under composition (g*h)(x) = g(h(x)), indexed in discovery order.
  static GroupPtr from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                    std::size_t degree, std::string name = {},
                                    std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return table_.size(); }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element identity() const noexcept { return 0; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Element power(Element g, long long k) const;
  std::size_t element_order(Element g) const { return elem_order_[g]; }
  const Table& table() const noexcept { return table_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const noexcept { return abelian_; }
  bool is_cyclic() const;
  std::size_t exponent() const;

  // Elements of the subgroup generated by `gens`, sorted.
  std::vector<Element> closure(const std::vector<Element>& gens) const;

  // All subgroups, sorted by order and then by member list. ResourceError when
  // the group is larger than `max_order`. Memoized for the default bound.
  const std::vector<Subgroup>& subgroups(std::size_t max_order = kDefaultMaxSubgroupOrder) const;
  std::vector<Subgroup> prime_power_subgroups(std::size_t max_order = kDefaultMaxSubgroupOrder) const;
  // One subgroup per conjugacy class, in the order of subgroups().
  std::vector<Subgroup> subgroup_class_representatives(
      std::size_t max_order = kDefaultMaxSubgroupOrder) const;

  Subgroup trivial_subgroup() const;
  Subgroup whole() const;
  Subgroup generated(const std::vector<Element>& gens) const;
  Subgroup make_subgroup(std::vector<Element> members) const;  // validates

  // Canonical text for memo keys: the multiplication table.
  std::string canonical_key() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

  FiniteGroup(Table table, std::string name, std::vector<Element> gens);  // use the factories

 private:
  void derive();

  Table table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> elem_order_;
  std::vector<Element> gens_;
  std::string name_;
  bool abelian_ = true;

  mutable std::once_flag subgroups_once_;
  mutable std::vector<Subgroup> subgroups_;
};

class Subgroup {
 public:
  Subgroup() = default;
  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element g) const { return mask_[g]; }
  bool is_normal() const noexcept { return normal_; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::size_t exponent() const;
  std::vector<Element> generators() const;  // greedy, in member order

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  friend class FiniteGroup;
  Subgroup(GroupPtr parent, std::vector<Element> members);  // members sorted, closed

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
  bool normal_ = false;
};

// Standalone group isomorphic to a subgroup; embedding[i] is the parent index
// of element i (members are taken in sorted order, so 0 stays the identity).
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Element> embedding;
};
SubgroupGroup subgroup_as_group(const Subgroup& h);

// G/N for normal N; cosets ordered by their smallest member. projection[g] is
// the image of g.
struct Quotient {
  GroupPtr group;
  std::vector<Element> projection;
};
Quotient quotient_group(const Subgroup& n);

// Element (g, h) has index g * |H| + h.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::string name = {});

GroupPtr cyclic_group(std::size_t n);

// C<n>, V4, D8, D16, Q8, S3, A4, U(2^n) / U(<2^n>), and products joined by 'x'
// such as C2xC4xC3.
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();  // the fixed catalog list

bool all_sylow_cyclic(const FiniteGroup& g);

struct ZGroupPresentation {
  std::size_t m = 1, n = 1, r = 1;
  Element sigma = 0, tau = 0;
};
std::optional<ZGroupPresentation> zgroup_presentation(const FiniteGroup& g);
// Re-checks every arithmetic and group-theoretic condition of a witness.
bool verify_zgroup_presentation(const FiniteGroup& g, const ZGroupPresentation& z);

struct AbelianCyclicQuotient {
  Subgroup h;
  Element tau = 0;
  std::size_t e_prime = 1;
};
std::optional<AbelianCyclicQuotient> abelian_normal_cyclic_quotient(const FiniteGroup& g);

// Prime-power orders q with G = prod C_q; primes ascending, larger powers first.
std::vector<std::size_t> abelian_decomposition(const FiniteGroup& g);

// Whether G/N is cyclic; N must be normal.
bool quotient_is_cyclic(const Subgroup& n);

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n);

}  // namespace rrat

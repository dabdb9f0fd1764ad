#include "rrat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rrat/errors.hpp"
#include "rrat/zlinalg.hpp"

namespace rrat {

namespace {

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> reached(g.order(), false);
  reached[0] = true;
  for (Element x = 1; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    for (Element y : g.closure(gens)) reached[y] = true;
  }
  return gens;
}

GroupPtr trusted(FiniteGroup::Table table, std::string name, std::optional<std::vector<Element>> gens = {}) {
  auto g = std::make_shared<FiniteGroup>(std::move(table), std::move(name), gens.value_or(std::vector<Element>{}));
  if (!gens) {
    auto greedy = greedy_generators(*g);
    return std::make_shared<FiniteGroup>(FiniteGroup::Table(g->table()), g->name(), std::move(greedy));
  }
  return g;
}

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

}  // namespace

// ---- FiniteGroup ----------------------------------------------------------

FiniteGroup::FiniteGroup(Table table, std::string name, std::vector<Element> gens)
    : table_(std::move(table)), gens_(std::move(gens)), name_(std::move(name)) {
  derive();
}

void FiniteGroup::derive() {
  const std::size_t n = table_.size();
  inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
  elem_order_.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    Element x = a;
    std::size_t k = 1;
    while (x != 0) {
      x = table_[x][a];
      ++k;
    }
    elem_order_[a] = k;
  }
  abelian_ = true;
  for (Element a = 0; a < n && abelian_; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) {
        abelian_ = false;
        break;
      }
}

GroupPtr FiniteGroup::from_table(const Table& table, std::string name, std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  if (n > max_order) throw ResourceError("group order " + std::to_string(n) + " exceeds bound " + std::to_string(max_order));
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    std::vector<bool> seen(n, false);
    for (Element x : row) {
      if (x >= n) throw InputError("group table entry out of range");
      if (seen[x]) throw InputError("group table row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw InputError("group table column is not a permutation");
      seen[table[i][j]] = true;
    }
  }
  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (!e) throw InputError("group table has no identity");

  std::vector<Element> order_of;  // new index -> old index
  order_of.push_back(*e);
  for (Element x = 0; x < n; ++x)
    if (x != *e) order_of.push_back(x);
  std::vector<Element> pos(n);
  for (Element i = 0; i < n; ++i) pos[order_of[i]] = i;
  Table t(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) t[i][j] = pos[table[order_of[i]][order_of[j]]];

  auto g = std::make_shared<FiniteGroup>(std::move(t), std::move(name), std::vector<Element>{});
  auto gens = greedy_generators(*g);
  // Light's test: (x s) y = x (s y) for generators s of the magma.
  for (Element s : gens)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (g->mul(g->mul(x, s), y) != g->mul(x, g->mul(s, y)))
          throw InputError("group table is not associative");
  if (g->closure(gens).size() != n) throw InternalError("greedy generators do not generate");
  return std::make_shared<FiniteGroup>(FiniteGroup::Table(g->table()), g->name(), std::move(gens));
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                        std::size_t degree, std::string name, std::size_t max_order) {
  if (degree == 0 || degree > 64) throw InputError("permutation degree must be in 1..64");
  using Perm = std::vector<std::uint8_t>;
  std::vector<Perm> gens;
  for (const auto& img : generators) {
    if (img.size() != degree) throw InputError("permutation image list has wrong length");
    Perm p(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (img[i] < 1 || img[i] > degree) throw InputError("permutation image out of range");
      if (seen[img[i] - 1]) throw InputError("image list is not a permutation");
      seen[img[i] - 1] = true;
      p[i] = static_cast<std::uint8_t>(img[i] - 1);
    }
    gens.push_back(std::move(p));
  }
  auto compose = [&](const Perm& g, const Perm& h) {
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = g[h[x]];
    return r;
  };
  auto key = [](const Perm& p) { return std::string(p.begin(), p.end()); };

  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::vector<Perm> elems{id};
  std::unordered_map<std::string, Element> index{{key(id), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = compose(elems[i], g);
      auto k = key(y);
      if (index.count(k)) continue;
      if (elems.size() >= max_order)
        throw ResourceError("generated permutation group exceeds order bound " + std::to_string(max_order));
      index.emplace(std::move(k), elems.size());
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  Table t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = index.at(key(compose(elems[a], elems[b])));
  std::vector<Element> gen_idx;
  for (const auto& g : gens) {
    Element x = index.at(key(g));
    if (x != 0 && std::find(gen_idx.begin(), gen_idx.end(), x) == gen_idx.end()) gen_idx.push_back(x);
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(name), std::move(gen_idx));
}

Element FiniteGroup::power(Element g, long long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  k %= static_cast<long long>(element_order(g));
  Element r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_cyclic() const {
  return std::any_of(elem_order_.begin(), elem_order_.end(), [&](std::size_t o) { return o == order(); });
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : elem_order_) e = lcm_size(e, o);
  return e;
}

std::vector<Element> FiniteGroup::closure(const std::vector<Element>& gens) const {
  std::vector<Element> elems{0};
  std::vector<bool> seen(order(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element g : gens) {
      Element y = mul(elems[i], g);
      if (!seen[y]) {
        seen[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup FiniteGroup::make_subgroup(std::vector<Element> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw InputError("subgroup must contain the identity");
  if (members.back() >= order()) throw InputError("subgroup member out of range");
  std::vector<bool> mask(order(), false);
  for (Element x : members) mask[x] = true;
  for (Element a : members) {
    if (!mask[inv(a)]) throw InputError("subset is not closed under inverses");
    for (Element b : members)
      if (!mask[mul(a, b)]) throw InputError("subset is not closed under multiplication");
  }
  if (order() % members.size() != 0) throw InternalError("Lagrange violated");
  return Subgroup(shared_from_this(), std::move(members));
}

Subgroup FiniteGroup::generated(const std::vector<Element>& gens) const {
  return Subgroup(shared_from_this(), closure(gens));
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup(shared_from_this(), {0}); }

Subgroup FiniteGroup::whole() const {
  std::vector<Element> all(order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(shared_from_this(), std::move(all));
}

const std::vector<Subgroup>& FiniteGroup::subgroups(std::size_t max_order) const {
  if (order() > max_order)
    throw ResourceError("subgroup enumeration bound " + std::to_string(max_order) + " exceeded (order " +
                        std::to_string(order()) + ")");
  std::call_once(subgroups_once_, [this] {
    const GroupPtr self = shared_from_this();
    std::map<std::vector<Element>, std::vector<Element>> found;  // members -> generators
    std::vector<std::vector<Element>> cyclic;
    for (Element g = 0; g < order(); ++g) {
      auto c = closure({g});
      if (found.emplace(c, g == 0 ? std::vector<Element>{} : std::vector<Element>{g}).second) cyclic.push_back(c);
    }
    std::vector<std::vector<Element>> work(cyclic.begin(), cyclic.end());
    while (!work.empty()) {
      auto s = std::move(work.back());
      work.pop_back();
      const auto gens_s = found.at(s);
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        auto gens = gens_s;
        for (Element x : found.at(c)) gens.push_back(x);
        auto j = closure(gens);
        if (found.emplace(j, gens).second) work.push_back(std::move(j));
      }
    }
    for (auto& [members, gens] : found) subgroups_.push_back(Subgroup(self, members));
    std::sort(subgroups_.begin(), subgroups_.end());
  });
  return subgroups_;
}

std::vector<Subgroup> FiniteGroup::prime_power_subgroups(std::size_t max_order) const {
  std::vector<Subgroup> out;
  for (const auto& s : subgroups(max_order)) {
    auto f = factorize(s.order());
    if (f.size() == 1) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> FiniteGroup::subgroup_class_representatives(std::size_t max_order) const {
  const auto& all = subgroups(max_order);
  std::map<std::vector<Element>, std::size_t> where;
  for (std::size_t i = 0; i < all.size(); ++i) where[all[i].members()] = i;
  std::vector<bool> done(all.size(), false);
  std::vector<Subgroup> reps;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (done[i]) continue;
    reps.push_back(all[i]);
    for (Element g = 0; g < order(); ++g) {
      std::vector<Element> conj;
      for (Element h : all[i].members()) conj.push_back(conjugate(g, h));
      std::sort(conj.begin(), conj.end());
      done[where.at(conj)] = true;
    }
  }
  return reps;
}

std::string FiniteGroup::canonical_key() const {
  std::ostringstream os;
  os << order() << ':';
  for (const auto& row : table_)
    for (Element x : row) os << x << ',';
  return os.str();
}

// ---- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  mask_.assign(parent_->order(), false);
  for (Element x : members_) mask_[x] = true;
  normal_ = true;
  for (Element g : parent_->generators()) {
    for (Element h : members_)
      if (!mask_[parent_->conjugate(g, h)]) {
        normal_ = false;
        break;
      }
    if (!normal_) break;
  }
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members_ < b.members_;
}

bool Subgroup::is_whole() const { return order() == parent_->order(); }

bool Subgroup::is_abelian() const {
  for (Element a : members_)
    for (Element b : members_)
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](Element g) { return parent_->element_order(g) == order(); });
}

std::size_t Subgroup::exponent() const {
  std::size_t e = 1;
  for (Element g : members_) e = lcm_size(e, parent_->element_order(g));
  return e;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> gens;
  std::vector<bool> reached(parent_->order(), false);
  reached[0] = true;
  for (Element x : members_) {
    if (reached[x]) continue;
    gens.push_back(x);
    for (Element y : parent_->closure(gens)) reached[y] = true;
  }
  return gens;
}

// ---- constructions --------------------------------------------------------

SubgroupGroup subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent();
  const auto& m = h.members();
  std::vector<Element> local(g.order(), 0);
  for (Element i = 0; i < m.size(); ++i) local[m[i]] = i;
  FiniteGroup::Table t(m.size(), std::vector<Element>(m.size()));
  for (Element i = 0; i < m.size(); ++i)
    for (Element j = 0; j < m.size(); ++j) t[i][j] = local[g.mul(m[i], m[j])];
  std::vector<Element> gens;
  for (Element x : h.generators()) gens.push_back(local[x]);
  return {std::make_shared<FiniteGroup>(std::move(t), std::string{}, std::move(gens)), m};
}

Quotient quotient_group(const Subgroup& n) {
  if (!n.is_normal()) throw InputError("quotient by a non-normal subgroup");
  const auto& g = *n.parent();
  std::vector<Element> proj(g.order(), g.order());
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (proj[x] != g.order()) continue;
    for (Element y : n.members()) proj[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t k = reps.size();
  FiniteGroup::Table t(k, std::vector<Element>(k));
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) t[i][j] = proj[g.mul(reps[i], reps[j])];
  std::vector<Element> gens;
  for (Element x : g.generators()) {
    Element y = proj[x];
    if (y != 0 && std::find(gens.begin(), gens.end(), y) == gens.end()) gens.push_back(y);
  }
  return {std::make_shared<FiniteGroup>(std::move(t), std::string{}, std::move(gens)), std::move(proj)};
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::string name) {
  const std::size_t a = g->order(), b = h->order();
  FiniteGroup::Table t(a * b, std::vector<Element>(a * b));
  for (Element x = 0; x < a * b; ++x)
    for (Element y = 0; y < a * b; ++y)
      t[x][y] = g->mul(x / b, y / b) * b + h->mul(x % b, y % b);
  std::vector<Element> gens;
  for (Element x : g->generators()) gens.push_back(x * b);
  for (Element y : h->generators()) gens.push_back(y);
  if (name.empty() && !g->name().empty() && !h->name().empty()) name = g->name() + "x" + h->name();
  return std::make_shared<FiniteGroup>(std::move(t), std::move(name), std::move(gens));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  if (n > kDefaultMaxOrder) throw ResourceError("cyclic group order exceeds bound");
  FiniteGroup::Table t(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return std::make_shared<FiniteGroup>(std::move(t), "C" + std::to_string(n), std::move(gens));
}

namespace {

GroupPtr quaternion8() {
  // index 2u + s: unit u in {1, i, j, k}, sign s (1 = negative)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  FiniteGroup::Table t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2) ^ (b % 2) ^ sign[ua][ub];
      t[a][b] = static_cast<Element>(2 * unit[ua][ub] + s);
    }
  return std::make_shared<FiniteGroup>(std::move(t), "Q8", std::vector<Element>{2, 4});
}

GroupPtr units_mod_2power(unsigned n) {
  if (n < 1 || n > 5) throw InputError("U(2^n) is available for 1 <= n <= 5");
  const std::size_t q = std::size_t{1} << n;
  std::vector<std::size_t> units;
  for (std::size_t u = 1; u < q; ++u)
    if (u % 2 == 1) units.push_back(u);
  std::vector<Element> pos(q, 0);
  for (Element i = 0; i < units.size(); ++i) pos[units[i]] = i;
  FiniteGroup::Table t(units.size(), std::vector<Element>(units.size()));
  for (Element i = 0; i < units.size(); ++i)
    for (Element j = 0; j < units.size(); ++j) t[i][j] = pos[units[i] * units[j] % q];
  return trusted(std::move(t), "U(2^" + std::to_string(n) + ")");
}

GroupPtr dihedral(std::size_t order) {
  const std::size_t k = order / 2;
  std::vector<std::size_t> r(k), s(k);
  for (std::size_t i = 0; i < k; ++i) {
    r[i] = (i + 1) % k + 1;
    s[i] = (k - i) % k + 1;
  }
  return FiniteGroup::from_permutations({r, s}, k, "D" + std::to_string(order));
}

std::optional<std::size_t> parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return static_cast<std::size_t>(std::stoul(s));
}

GroupPtr catalog_factor(const std::string& name) {
  if (name == "V4") {
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    return std::make_shared<FiniteGroup>(FiniteGroup::Table(g->table()), "V4", g->generators());
  }
  if (name == "D8") return dihedral(8);
  if (name == "D16") return dihedral(16);
  if (name == "Q8") return quaternion8();
  if (name == "S3") return FiniteGroup::from_permutations({{2, 3, 1}, {2, 1, 3}}, 3, "S3");
  if (name == "A4") return FiniteGroup::from_permutations({{2, 3, 1, 4}, {1, 3, 4, 2}}, 4, "A4");
  if (name.size() > 1 && name[0] == 'C') {
    if (auto n = parse_positive(name.substr(1))) return cyclic_group(*n);
  }
  if (name.size() > 3 && name.rfind("U(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(2, name.size() - 3);
    if (inner.rfind("2^", 0) == 0) {
      if (auto n = parse_positive(inner.substr(2)); n && *n <= 5) return units_mod_2power(static_cast<unsigned>(*n));
    } else if (auto q = parse_positive(inner)) {
      for (unsigned n = 1; n <= 5; ++n)
        if (*q == (std::size_t{1} << n)) return units_mod_2power(n);
    }
  }
  throw InputError("unknown catalog group '" + name + "'");
}

}  // namespace

GroupPtr catalog_group(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  GroupPtr g = catalog_factor(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = direct_product(g, catalog_factor(parts[i]));
    if (g->order() > kDefaultMaxOrder) throw ResourceError("catalog product exceeds order bound");
  }
  if (parts.size() > 1)
    g = std::make_shared<FiniteGroup>(FiniteGroup::Table(g->table()), name, g->generators());
  return g;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 16; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"V4", "C2xC4", "C2xC2xC2", "D8", "D16", "Q8", "S3", "A4"}) names.emplace_back(s);
  for (int n = 1; n <= 5; ++n) names.push_back("U(2^" + std::to_string(n) + ")");
  return names;
}

// ---- recognizers ----------------------------------------------------------

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

bool all_sylow_cyclic(const FiniteGroup& g) {
  for (auto [p, e] : factorize(g.order())) {
    std::size_t pa = 1;
    for (unsigned i = 0; i < e; ++i) pa *= p;
    bool found = false;
    for (Element x = 0; x < g.order() && !found; ++x) found = g.element_order(x) == pa;
    if (!found) return false;
  }
  return true;
}

bool verify_zgroup_presentation(const FiniteGroup& g, const ZGroupPresentation& z) {
  if (z.sigma >= g.order() || z.tau >= g.order()) return false;
  if (g.element_order(z.sigma) != z.m || g.element_order(z.tau) != z.n) return false;
  if (z.m * z.n != g.order()) return false;
  if (g.conjugate(z.tau, z.sigma) != g.power(z.sigma, static_cast<long long>(z.r))) return false;
  std::size_t rn = 1 % z.m;
  for (std::size_t i = 0; i < z.n; ++i) rn = rn * (z.r % z.m) % z.m;
  if (rn != 1 % z.m) return false;
  // r = 1 is read as gcd(n, m) = 1
  std::size_t lhs = z.r == 1 ? z.n : (z.r - 1) * z.n;
  if (std::gcd(lhs, z.m) != 1) return false;
  return g.closure({z.sigma, z.tau}).size() == g.order();
}

std::optional<ZGroupPresentation> zgroup_presentation(const FiniteGroup& g) {
  if (!all_sylow_cyclic(g)) return std::nullopt;
  const std::size_t n = g.order();
  if (n == 1) return ZGroupPresentation{};
  std::optional<ZGroupPresentation> best;
  auto better = [](const ZGroupPresentation& a, const ZGroupPresentation& b) {
    bool ab = a.m > 1 && a.n > 1, bb = b.m > 1 && b.n > 1;
    if (ab != bb) return ab;
    if (a.m != b.m) return a.m > b.m;
    if (a.r != b.r) return a.r < b.r;
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.tau < b.tau;
  };
  for (Element s = 0; s < n; ++s) {
    const std::size_t m = g.element_order(s);
    if (n % m != 0) continue;
    std::vector<Element> powers(m);
    for (std::size_t k = 0, x = 0; k < m; ++k, x = g.mul(x, s)) powers[k] = x;
    for (Element t = 0; t < n; ++t) {
      if (g.element_order(t) * m != n) continue;
      Element c = g.conjugate(t, s);
      auto it = std::find(powers.begin(), powers.end(), c);
      if (it == powers.end()) continue;
      std::size_t r = static_cast<std::size_t>(it - powers.begin());
      if (m == 1) r = 1;
      ZGroupPresentation z{m, g.element_order(t), r, s, t};
      if (best && !better(z, *best)) continue;
      if (verify_zgroup_presentation(g, z)) best = z;
    }
  }
  if (!best) throw InternalError("Z-group without a metacyclic presentation");
  return best;
}

std::optional<AbelianCyclicQuotient> abelian_normal_cyclic_quotient(const FiniteGroup& g) {
  if (g.is_abelian()) return AbelianCyclicQuotient{g.whole(), 0, g.exponent()};
  std::optional<AbelianCyclicQuotient> best;
  for (const auto& h : g.subgroups()) {
    if (!h.is_normal() || !h.is_abelian()) continue;
    const std::size_t index = g.order() / h.order();
    const std::size_t eh = h.exponent();
    for (Element t = 0; t < g.order(); ++t) {
      std::size_t k = 1;
      for (Element x = t; !h.contains(x); x = g.mul(x, t)) ++k;
      if (k != index) continue;
      std::size_t e = lcm_size(eh, g.element_order(t));
      if (!best || e < best->e_prime || (e == best->e_prime && h.order() < best->h.order()))
        best = AbelianCyclicQuotient{h, t, e};
    }
  }
  return best;
}

std::vector<std::size_t> abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InputError("abelian_decomposition of a non-abelian group");
  const auto& gens = g.generators();
  const std::size_t s = gens.size();
  // Spanning tree of the Cayley graph gives coordinates; every edge gives a relation.
  std::vector<IntVector> coord(g.order());
  std::vector<bool> seen(g.order(), false);
  coord[0] = IntVector(s);
  seen[0] = true;
  std::vector<Element> queue{0};
  std::vector<IntVector> relations;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < s; ++k) {
      Element y = g.mul(x, gens[k]);
      IntVector c = coord[x];
      c[k] += 1;
      if (!seen[y]) {
        seen[y] = true;
        coord[y] = c;
        queue.push_back(y);
      } else {
        for (std::size_t j = 0; j < s; ++j) c[j] -= coord[y][j];
        if (std::any_of(c.begin(), c.end(), [](const Integer& v) { return sgn(v) != 0; }))
          relations.push_back(std::move(c));
      }
    }
  }
  auto inv = cokernel_invariants(IntMatrix::from_columns(relations, s), s);
  if (!inv.is_finite()) throw InternalError("relation lattice of a finite group has positive corank");
  std::vector<std::pair<std::size_t, std::size_t>> parts;  // (p, p^a)
  for (const auto& d : inv.divisors)
    for (auto [p, e] : factorize(d.get_ui())) {
      std::size_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      parts.emplace_back(p, q);
    }
  std::sort(parts.begin(), parts.end(), [](auto a, auto b) { return a.first != b.first ? a.first < b.first : a.second > b.second; });
  std::vector<std::size_t> out;
  for (auto [p, q] : parts) out.push_back(q);
  return out;
}

bool quotient_is_cyclic(const Subgroup& n) {
  const auto& g = *n.parent();
  const std::size_t index = g.order() / n.order();
  for (Element t = 0; t < g.order(); ++t) {
    std::size_t k = 1;
    for (Element x = t; !n.contains(x); x = g.mul(x, t)) ++k;
    if (k == index) return true;
  }
  return false;
}

}  // namespace rrat

#include "ncng/finite_group.hpp"

#include "ncng/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace ncng {

ElementSet make_set(std::size_t order, const std::vector<Elem>& members) {
  ElementSet s(order);
  for (Elem m : members) s.set(m);
  return s;
}

std::vector<Elem> to_vector(const ElementSet& set) {
  std::vector<Elem> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

std::size_t hash_value(const ElementSet& set) {
  std::vector<std::uint64_t> blocks(set.num_blocks());
  boost::to_block_range(set, blocks.begin());
  std::size_t seed = set.size();
  boost::hash_range(seed, blocks.begin(), blocks.end());
  return seed;
}

std::strong_ordering compare_members(const ElementSet& a, const ElementSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  if (i == ElementSet::npos && j == ElementSet::npos) return std::strong_ordering::equal;
  return i == ElementSet::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

SubgroupSet::SubgroupSet(ElementSet members) : members_(std::move(members)), order_(members_.count()) {}

std::strong_ordering operator<=>(const SubgroupSet& a, const SubgroupSet& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return compare_members(a.members_, b.members_);
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<std::string> labels, std::vector<Elem> generators)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)), generators_(std::move(generators)) {
  if (order_ == 0 || order_ > kMaxOrder) throw NotClosed("unsupported group order");
  if (table_.size() != order_ * order_) throw NotClosed("Cayley table has the wrong size");
  if (labels_.size() != order_) labels_.resize(order_);
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    const std::uint16_t* row = &table_[static_cast<std::size_t>(a) * order_];
    auto it = std::find(row, row + order_, 0);
    if (it == row + order_) throw NotClosed("element " + std::to_string(a) + " has no inverse");
    inverse_[a] = static_cast<Elem>(it - row);
  }
}

std::optional<Elem> FiniteGroup::find(std::string_view label) const {
  for (Elem g = 0; g < order_; ++g) {
    if (labels_[g] == label) return g;
  }
  return std::nullopt;
}

Elem FiniteGroup::pow(Elem g, long long exponent) const {
  if (exponent < 0) {
    g = inv(g);
    exponent = -exponent;
  }
  Elem result = 0;
  Elem base = g;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

Elem FiniteGroup::commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

Elem FiniteGroup::conjugate(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_) {
    for (Elem b : generators_) {
      if (!commute(a, b)) return false;
    }
  }
  if (!generators_.empty()) return true;
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (!commute(a, b)) return false;
    }
  }
  return true;
}

SubgroupSet FiniteGroup::trivial() const {
  ElementSet s(order_);
  s.set(0);
  return SubgroupSet(std::move(s));
}

void verify_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples) {
  const std::size_t n = g.order();
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw NotClosed("element 0 is not the identity");
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) {
      throw NotClosed("inverse table is inconsistent at " + std::to_string(a));
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) seen[g.mul(a, b)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) {
      throw NotClosed("row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) seen[g.mul(b, a)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) {
      throw NotClosed("column " + std::to_string(a) + " is not a permutation");
    }
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw NotClosed("multiplication is not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

SubgroupSet centralizer(const FiniteGroup& g, std::span<const Elem> s) {
  ElementSet out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::all_of(s.begin(), s.end(), [&](Elem y) { return g.commute(x, y); })) out.set(x);
  }
  return SubgroupSet(std::move(out));
}

SubgroupSet centralizer(const FiniteGroup& g, const SubgroupSet& h) {
  auto elems = h.elements();
  return centralizer(g, elems);
}

SubgroupSet center(const FiniteGroup& g) {
  if (!g.generators().empty()) return centralizer(g, g.generators());
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return centralizer(g, all);
}

SubgroupSet subgroup_center(const FiniteGroup& g, const SubgroupSet& h) {
  auto elems = h.elements();
  ElementSet out(g.order());
  for (Elem x : elems) {
    if (std::all_of(elems.begin(), elems.end(), [&](Elem y) { return g.commute(x, y); })) out.set(x);
  }
  return SubgroupSet(std::move(out));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyClasses out;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  out.class_of.assign(n, unset);
  auto gens = g.generators();
  std::vector<Elem> all_elems;
  if (gens.empty()) {
    all_elems.resize(n);
    std::iota(all_elems.begin(), all_elems.end(), Elem{0});
    gens = all_elems;
  }
  for (Elem x = 0; x < n; ++x) {
    if (out.class_of[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<Elem> orbit{x};
    out.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : gens) {
        Elem y = g.conjugate(orbit[i], s);
        if (out.class_of[y] == unset) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

Quotient quotient(const FiniteGroup& g, const SubgroupSet& n) {
  const std::size_t order = g.order();
  auto nelems = n.elements();
  std::vector<Elem> conjugators(g.generators().begin(), g.generators().end());
  if (conjugators.empty()) {
    conjugators.resize(order);
    std::iota(conjugators.begin(), conjugators.end(), Elem{0});
  }
  for (Elem s : conjugators) {
    for (Elem x : nelems) {
      if (!n.contains(g.conjugate(x, s))) throw NotNormal("subgroup is not normal");
    }
  }
  constexpr auto unset = static_cast<Elem>(-1);
  std::vector<Elem> coset(order, unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : nelems) coset[g.mul(m, x)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::uint16_t> table(k * k);
  std::vector<std::string> labels(k);
  for (Elem a = 0; a < k; ++a) {
    labels[a] = "N" + g.label(reps[a]);
    for (Elem b = 0; b < k; ++b) {
      table[static_cast<std::size_t>(a) * k + b] = static_cast<std::uint16_t>(coset[g.mul(reps[a], reps[b])]);
    }
  }
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    Elem c = coset[s];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  return Quotient{FiniteGroup(k, std::move(table), std::move(labels), std::move(gens)), std::move(coset)};
}

}  // namespace ncng

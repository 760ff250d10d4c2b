#include "ncng/subgroups.hpp"

#include "ncng/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ncng {

namespace {

std::vector<Elem> conjugators_of(const FiniteGroup& g) {
  std::vector<Elem> out(g.generators().begin(), g.generators().end());
  if (out.empty() && g.order() > 1) {
    out.resize(g.order());
    std::iota(out.begin(), out.end(), Elem{0});
  }
  return out;
}

}  // namespace

SubgroupSet join(const FiniteGroup& g, const SubgroupSet& h, std::span<const Elem> h_generators, Elem x) {
  if (h.contains(x)) return h;
  std::vector<Elem> gens(h_generators.begin(), h_generators.end());
  gens.push_back(x);
  const std::vector<Elem> helems = h.elements();
  ElementSet members = h.members();
  std::vector<Elem> reps{0};
  auto add_coset = [&](Elem r) {
    for (Elem e : helems) members.set(g.mul(e, r));
    reps.push_back(r);
  };
  // Right cosets Hr are permuted by right multiplication, so closing the
  // coset list under the generators yields <H, x>.
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(reps[i], s);
      if (!members.test(y)) add_coset(y);
    }
  }
  return SubgroupSet(std::move(members));
}

SubgroupSet closure(const FiniteGroup& g, std::span<const Elem> seed) {
  SubgroupSet h = g.trivial();
  std::vector<Elem> gens;
  for (Elem x : seed) {
    if (h.contains(x)) continue;
    h = join(g, h, gens, x);
    gens.push_back(x);
  }
  return h;
}

SubgroupSet closure(const FiniteGroup& g, const ElementSet& seed) {
  const auto elems = to_vector(seed);
  return closure(g, elems);
}

std::vector<Elem> generating_set(const FiniteGroup& g, const SubgroupSet& h) {
  SubgroupSet cur = g.trivial();
  std::vector<Elem> gens;
  for (auto i = h.members().find_first(); i != ElementSet::npos && cur.order() < h.order();
       i = h.members().find_next(i)) {
    const auto x = static_cast<Elem>(i);
    if (cur.contains(x)) continue;
    cur = join(g, cur, gens, x);
    gens.push_back(x);
  }
  return gens;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  auto& cache = h.normal_cache();
  if (cache) return *cache;
  const auto elems = h.elements();
  bool normal = true;
  for (Elem s : conjugators_of(g)) {
    for (Elem x : elems) {
      if (!h.contains(g.conjugate(x, s))) {
        normal = false;
        break;
      }
    }
    if (!normal) break;
  }
  cache = normal;
  return normal;
}

bool is_abelian(const FiniteGroup& g, const SubgroupSet& h) {
  auto& cache = h.abelian_cache();
  if (cache) return *cache;
  const auto gens = generating_set(g, h);
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j])) {
        abelian = false;
        break;
      }
    }
  }
  cache = abelian;
  return abelian;
}

bool is_cyclic(const FiniteGroup& g, const SubgroupSet& h) {
  for (Elem x : h.elements()) {
    if (g.element_order(x) == h.order()) return true;
  }
  return false;
}

SubgroupSet conjugate_subgroup(const FiniteGroup& g, const SubgroupSet& h, Elem x) {
  ElementSet out(g.order());
  for (Elem y : h.elements()) out.set(g.conjugate(y, x));
  return SubgroupSet(std::move(out));
}

SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& h) {
  const auto gens = generating_set(g, h);
  ElementSet out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](Elem y) { return h.contains(g.conjugate(y, x)); })) out.set(x);
  }
  return SubgroupSet(std::move(out));
}

SubgroupSet core(const FiniteGroup& g, const SubgroupSet& h) {
  std::vector<SubgroupSet> orbit{h};
  ElementSet acc = h.members();
  const auto conj = conjugators_of(g);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Elem s : conj) {
      SubgroupSet k = conjugate_subgroup(g, orbit[i], s);
      if (std::find(orbit.begin(), orbit.end(), k) == orbit.end()) {
        acc &= k.members();
        orbit.push_back(std::move(k));
      }
    }
  }
  return SubgroupSet(std::move(acc));
}

SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& h) {
  const auto elems = h.elements();
  ElementSet comms(g.order());
  for (Elem x : elems)
    for (Elem y : elems) comms.set(g.commutator(x, y));
  return closure(g, comms);
}

ElementSet product_set(const FiniteGroup& g, const SubgroupSet& h, const SubgroupSet& k) {
  ElementSet out(g.order());
  const auto kelems = k.elements();
  for (Elem x : h.elements())
    for (Elem y : kelems) out.set(g.mul(x, y));
  return out;
}

SubgroupLattice::SubgroupLattice(std::vector<SubgroupSet> subgroups) : subgroups_(std::move(subgroups)) {
  std::sort(subgroups_.begin(), subgroups_.end());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) index_.emplace(subgroups_[i].members(), i);
}

std::optional<std::size_t> SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t lattice_cap) {
  if (g.order() > lattice_cap) throw LatticeCapExceeded(g.order(), lattice_cap);
  const auto conj = conjugators_of(g);

  std::vector<SubgroupSet> subs;
  std::vector<std::vector<Elem>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> known;
  std::vector<std::size_t> representatives;

  // Adds the whole conjugacy class of S, remembering S as its representative.
  auto add_class = [&](SubgroupSet s, std::vector<Elem> sgens) {
    if (known.count(s.members())) return;
    representatives.push_back(subs.size());
    const std::size_t first = subs.size();
    known.emplace(s.members(), subs.size());
    subs.push_back(std::move(s));
    gens.push_back(std::move(sgens));
    for (std::size_t i = first; i < subs.size(); ++i) {
      for (Elem c : conj) {
        SubgroupSet t = conjugate_subgroup(g, subs[i], c);
        if (known.count(t.members())) continue;
        std::vector<Elem> tgens;
        for (Elem y : gens[i]) tgens.push_back(g.conjugate(y, c));
        known.emplace(t.members(), subs.size());
        subs.push_back(std::move(t));
        gens.push_back(std::move(tgens));
      }
    }
  };

  add_class(g.trivial(), {});
  std::vector<std::pair<Elem, ElementSet>> cyclic;
  {
    std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
    for (Elem x = 1; x < g.order(); ++x) {
      const Elem one[] = {x};
      SubgroupSet c = closure(g, one);
      if (seen.emplace(c.members(), x).second) {
        cyclic.emplace_back(x, c.members());
        add_class(std::move(c), {x});
      }
    }
  }

  for (std::size_t r = 0; r < representatives.size(); ++r) {
    const std::size_t i = representatives[r];
    for (const auto& [x, members] : cyclic) {
      if (subs[i].contains(x) || members.is_subset_of(subs[i].members())) continue;
      SubgroupSet k = join(g, subs[i], gens[i], x);
      if (known.count(k.members())) continue;
      std::vector<Elem> kgens = gens[i];
      kgens.push_back(x);
      add_class(std::move(k), std::move(kgens));
    }
  }
  return SubgroupLattice(std::move(subs));
}

std::vector<SubgroupSet> subgroups_of(const SubgroupLattice& lattice, const SubgroupSet& h) {
  std::vector<SubgroupSet> out;
  for (const auto& s : lattice.subgroups()) {
    if (s.order() <= h.order() && h.order() % s.order() == 0 && s.is_subset_of(h)) out.push_back(s);
  }
  return out;
}

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<SubgroupSet> out;
  for (const auto& s : lattice.subgroups()) {
    if (is_normal(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<SubgroupSet> maximal_subgroups_of(const SubgroupLattice& lattice, const SubgroupSet& h) {
  const auto subs = subgroups_of(lattice, h);
  std::vector<SubgroupSet> out;
  // Descending order: a proper subgroup is maximal iff no maximal found so far contains it.
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    if (it->order() == h.order()) continue;
    if (std::none_of(out.begin(), out.end(), [&](const SubgroupSet& m) { return it->is_subset_of(m); })) {
      out.push_back(*it);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupSet frattini_of(const SubgroupLattice& lattice, const SubgroupSet& h) {
  const auto maximals = maximal_subgroups_of(lattice, h);
  ElementSet acc = h.members();
  for (const auto& m : maximals) acc &= m.members();
  return SubgroupSet(std::move(acc));
}

MaximalData maximal_data(const FiniteGroup& g, const SubgroupLattice& lattice) {
  MaximalData out;
  out.maximals = maximal_subgroups_of(lattice, g.whole());
  const auto conj = conjugators_of(g);
  std::vector<int> class_of(out.maximals.size(), -1);
  for (std::size_t i = 0; i < out.maximals.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<std::size_t> members{i};
    class_of[i] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (Elem c : conj) {
        const SubgroupSet t = conjugate_subgroup(g, out.maximals[members[k]], c);
        auto it = std::lower_bound(out.maximals.begin(), out.maximals.end(), t);
        const auto j = static_cast<std::size_t>(it - out.maximals.begin());
        if (it == out.maximals.end() || !(*it == t)) throw NotClosed("conjugate of a maximal subgroup is not maximal");
        if (class_of[j] < 0) {
          class_of[j] = id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  out.cores.resize(out.maximals.size());
  for (const auto& cls : out.classes) {
    ElementSet acc = out.maximals[cls.front()].members();
    for (std::size_t j : cls) acc &= out.maximals[j].members();
    for (std::size_t j : cls) out.cores[j] = SubgroupSet(acc);
  }
  ElementSet acc = g.full_set();
  for (const auto& m : out.maximals) acc &= m.members();
  out.frattini = SubgroupSet(std::move(acc));
  return out;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

SubgroupSet sylow(const FiniteGroup& g, unsigned p) {
  if (p < 2 || g.order() % p != 0) throw PrimeNotDividing(p, g.order());
  const auto primes = prime_divisors(p);
  if (primes.size() != 1 || primes[0] != p) throw PrimeNotDividing(p, g.order());
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;

  auto is_p_power = [p](std::size_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  SubgroupSet current = g.trivial();
  std::vector<Elem> gens;
  // N(P)/P has an element of order p while P is not yet Sylow.
  while (current.order() < target) {
    const SubgroupSet n = normalizer(g, current);
    bool grown = false;
    for (Elem x : n.elements()) {
      if (current.contains(x) || !is_p_power(g.element_order(x))) continue;
      current = join(g, current, gens, x);
      gens.push_back(x);
      grown = true;
      break;
    }
    if (!grown) throw NotClosed("Sylow search stalled");
  }
  return current;
}

TwoGeneration is_two_generated(const FiniteGroup& g) {
  const auto gens = g.generators();
  if (g.order() == 1) return {true, std::pair<Elem, Elem>{0, 0}};
  if (gens.size() == 1) return {true, std::pair<Elem, Elem>{gens[0], 0}};
  if (gens.size() == 2) return {true, std::pair<Elem, Elem>{gens[0], gens[1]}};
  const auto classes = conjugacy_classes(g);
  for (const auto& cls : classes.classes) {
    const Elem x = cls.front();
    if (x == 0) continue;
    for (Elem y = 1; y < g.order(); ++y) {
      const Elem pair[] = {x, y};
      if (closure(g, pair).is_whole()) return {true, std::pair<Elem, Elem>{x, y}};
    }
  }
  return {false, std::nullopt};
}

bool is_soluble(const FiniteGroup& g) {
  SubgroupSet d = g.whole();
  while (!d.is_trivial()) {
    SubgroupSet next = derived_subgroup(g, d);
    if (next == d) return false;
    d = std::move(next);
  }
  return true;
}

StructureReport structure_report(const FiniteGroup& g, const SubgroupLattice& lattice, const MaximalData& maximal) {
  StructureReport out;
  out.is_abelian = g.is_abelian();
  out.is_soluble = is_soluble(g);
  out.is_nilpotent = std::all_of(maximal.maximals.begin(), maximal.maximals.end(),
                                 [&](const SubgroupSet& m) { return is_normal(g, m); });
  out.is_primitive = std::any_of(maximal.cores.begin(), maximal.cores.end(),
                                 [](const SubgroupSet& c) { return c.is_trivial(); });
  const auto normals = normal_subgroups(g, lattice);
  out.all_proper_quotients_cyclic = true;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    const Quotient q = quotient(g, n);
    if (!is_cyclic(q.group, q.group.whole())) {
      out.all_proper_quotients_cyclic = false;
      break;
    }
  }
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    const bool minimal = std::none_of(normals.begin(), normals.end(), [&](const SubgroupSet& k) {
      return !k.is_trivial() && k.order() < n.order() && k.is_subset_of(n);
    });
    if (minimal) out.minimal_normals.push_back(n);
  }
  return out;
}

}  // namespace ncng

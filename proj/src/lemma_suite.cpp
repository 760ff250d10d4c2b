#include "ncng/lemma_suite.hpp"

#include "ncng/classify.hpp"
#include "ncng/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ncng {

namespace {

struct Suite {
  GroupContext& ctx;
  const SuiteOptions& opt;
  const FiniteGroup& g;

  const std::vector<SubgroupSet>& maximals() { return ctx.maximal().maximals; }

  std::vector<SubgroupSet> maximal_centres() {
    std::vector<SubgroupSet> out;
    for (const auto& m : maximals()) out.push_back(subgroup_center(g, m));
    return out;
  }

  bool noncyclic_closure_quotient(Elem x) { return !ctx.quotient_is_cyclic(ctx.normal_closure_of(x)); }

  std::string label(Elem x) const { return g.label(x); }
};

using CheckFn = std::function<void(Suite&, Checker&)>;

struct CheckDef {
  std::string name;
  bool needs_lattice;
  CheckFn run;
};

bool unreachable(std::uint16_t d) { return d == DistanceMatrix::kUnreachable; }

ElementSet minus(const SubgroupSet& a, const SubgroupSet& b) { return a.members() - b.members(); }

std::string order_tag(const char* name, const SubgroupSet& h) { return std::string(name) + "=" + std::to_string(h.order()); }

// Graph basics.

void no_component_of_diameter_one(Suite& s, Checker& ck) {
  const auto& sum = s.ctx.summary();
  for (std::size_t i = 0; i < sum.components.size(); ++i) {
    if (sum.components[i].count() < 2) continue;
    ck.expect(sum.diameters[i] != 1, "component of diameter 1");
  }
}

void not_two_generated_diameter_two(Suite& s, Checker& ck) {
  if (s.g.is_abelian() || s.ctx.two_generation().two_generated) return;
  ck.expect(s.ctx.summary().diameter() == 2u, "not 2-generated but diameter is not 2");
}

void isolated_iff_unique_maximal_centre(Suite& s, Checker& ck) {
  if (s.g.is_abelian() || !s.ctx.two_generation().two_generated) return;
  const auto& graph = s.ctx.graph();
  const auto& maxs = s.maximals();
  const auto centres = s.maximal_centres();
  for_each_member(graph.vertices, [&](Elem x) {
    std::size_t containing = 0, last = 0;
    bool noncentral_somewhere = false;
    for (std::size_t i = 0; i < maxs.size(); ++i) {
      if (!maxs[i].contains(x)) continue;
      ++containing;
      last = i;
      if (!centres[i].contains(x)) noncentral_somewhere = true;
    }
    const bool isolated = graph.adjacency[x].none();
    const bool unique_central = containing == 1 && centres[last].contains(x);
    ck.expect(isolated == unique_central, "isolation mismatch at " + s.label(x));
    if (!isolated) ck.expect(noncentral_somewhere, "non-isolated " + s.label(x) + " central in every maximal");
  });
}

void proper_subgroup_diameter_two(Suite& s, Checker& ck) {
  const auto& graph = s.ctx.graph();
  for (const auto& h : s.ctx.lattice().subgroups()) {
    if (h.is_whole() || is_abelian(s.g, h)) continue;
    const GroupGraph sub = induced_subgraph(graph, minus(h, subgroup_center(s.g, h)));
    const auto sum = component_summary(s.g, sub, true);
    ck.expect(sum.diameter() == 2u, "induced subgraph of " + order_tag("|H|", h) + " is not of diameter 2");
  }
}

void non_commuting_graph_diameter_two(Suite& s, Checker& ck) {
  if (s.g.is_abelian()) return;
  ck.expect(s.ctx.summary(GraphKind::non_commuting).diameter() == 2u, "non-commuting graph diameter is not 2");
}

void isolated_unique_maximal_abelian(Suite& s, Checker& ck) {
  if (!s.ctx.two_generation().two_generated) return;
  const auto& maxs = s.maximals();
  const auto centres = s.maximal_centres();
  for (Elem x = 0; x < s.g.order(); ++x) {
    std::size_t containing = 0, last = 0;
    for (std::size_t i = 0; i < maxs.size(); ++i) {
      if (maxs[i].contains(x)) {
        ++containing;
        last = i;
      }
    }
    if (containing != 1 || !centres[last].contains(x)) continue;
    ck.expect(is_abelian(s.g, maxs[last]), "unique maximal around " + s.label(x) + " is non-abelian");
  }
}

void no_edge_iff_proper_subgroups_abelian(Suite& s, Checker& ck) {
  bool all_abelian = true;
  for (const auto& m : s.maximals()) all_abelian = all_abelian && is_abelian(s.g, m);
  ck.expect((s.ctx.graph().edge_count() == 0) == all_abelian, "edge existence disagrees with abelian maximals");
}

// Maximal subgroup structure.

void ore_equivalences(Suite& s, Checker& ck) {
  if (!s.ctx.structure().is_soluble) return;
  const auto& md = s.ctx.maximal();
  std::vector<std::size_t> class_of(md.maximals.size());
  for (std::size_t c = 0; c < md.classes.size(); ++c) {
    for (std::size_t i : md.classes[c]) class_of[i] = c;
  }
  for (std::size_t i = 0; i < md.maximals.size(); ++i) {
    for (std::size_t j = i + 1; j < md.maximals.size(); ++j) {
      const auto& l = md.maximals[i];
      const auto& m = md.maximals[j];
      const bool conjugate = class_of[i] == class_of[j];
      const bool same_core = md.cores[i] == md.cores[j];
      const bool product_proper = l.order() * m.order() / l.intersect(m).order() < s.g.order();
      ck.expect(conjugate == same_core && same_core == product_proper,
                "maximals " + std::to_string(i) + "," + std::to_string(j) + " break the equivalence");
    }
  }
}

void frattini_is_intersection(Suite& s, Checker& ck) {
  const auto& md = s.ctx.maximal();
  ElementSet meet = s.g.full_set();
  for (const auto& m : maximal_subgroups_of(s.ctx.lattice(), s.g.whole())) meet &= m.members();
  ck.expect(meet == md.frattini.members(), "Frattini differs from the intersection of maximals");
}

void frattini_is_non_generators(Suite& s, Checker& ck) {
  if (s.g.order() > s.opt.frattini_order_limit) {
    ck.skip("order above " + std::to_string(s.opt.frattini_order_limit));
    return;
  }
  const auto& md = s.ctx.maximal();
  const auto& subs = s.ctx.lattice().subgroups();
  std::vector<std::vector<Elem>> gens;
  for (const auto& h : subs) gens.push_back(generating_set(s.g, h));
  for (Elem x = 0; x < s.g.order(); ++x) {
    bool non_generator = true;
    for (std::size_t i = 0; i < subs.size() && non_generator; ++i) {
      if (!subs[i].is_whole() && join(s.g, subs[i], gens[i], x).is_whole()) non_generator = false;
    }
    ck.expect(non_generator == md.frattini.contains(x), "non-generator mismatch at " + s.label(x));
  }
}

void overgroup_centre_in_intersection(Suite& s, Checker& ck) {
  const SubgroupSet& z = s.ctx.center();
  const auto& maxs = s.maximals();
  const auto centres = s.maximal_centres();
  for (const auto& y : s.ctx.lattice().subgroups()) {
    if (y.is_whole()) continue;
    std::optional<SubgroupSet> zy;
    for (std::size_t i = 0; i < maxs.size(); ++i) {
      const auto& x = maxs[i];
      if (y.is_subset_of(x) || centres[i].intersect(y).is_subset_of(z)) continue;
      if (!zy) zy = subgroup_center(s.g, y);
      ck.expect(zy->is_subset_of(x.intersect(y)), "Z(Y) not inside X n Y");
      if (is_abelian(s.g, x)) ck.expect(zy->is_subset_of(z), "Z(Y) not central for abelian X");
    }
  }
}

void three_maximal_intersection(Suite& s, Checker& ck) {
  const auto& maxs = s.maximals();
  const auto& subs = s.ctx.lattice().subgroups();
  for (const auto& x : maxs) {
    if (!is_normal(s.g, x)) continue;
    for (const auto& y : maxs) {
      if (y == x) continue;
      const SubgroupSet xy = x.intersect(y);
      for (const auto& w : subs) {
        if (w.is_whole() || w == x || w == y) continue;
        const SubgroupSet wx = w.intersect(x);
        if (wx.is_subset_of(y) || !is_normal(s.g, wx)) continue;
        ck.expect(!xy.is_subset_of(w), "X n Y inside W");
      }
    }
  }
}

void centre_maximal_edges(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  const auto& lattice = s.ctx.lattice();
  const auto& subs = lattice.subgroups();
  const auto& maxs = s.maximals();
  const bool with_paths = g.order() <= s.opt.path_order_limit;
  if (!with_paths) ck.note("path clause limited to order <= " + std::to_string(s.opt.path_order_limit));

  std::vector<const SubgroupSet*> ks;
  if (subs.size() <= s.opt.pair_lattice_limit) {
    for (const auto& h : subs) {
      if (!h.is_whole()) ks.push_back(&h);
    }
  } else {
    for (const auto& m : maxs) ks.push_back(&m);
  }
  auto normal_maximal = [&](const SubgroupSet& h) {
    return is_normal(g, h) && std::find(maxs.begin(), maxs.end(), h) != maxs.end();
  };
  std::map<std::size_t, std::vector<SubgroupSet>> maximal_of;
  auto is_maximal_in = [&](const SubgroupSet& h, const SubgroupSet& parent) {
    const auto idx = *lattice.index_of(parent.members());
    auto it = maximal_of.find(idx);
    if (it == maximal_of.end()) it = maximal_of.emplace(idx, maximal_subgroups_of(lattice, parent)).first;
    return std::find(it->second.begin(), it->second.end(), h) != it->second.end();
  };

  for (const auto& j : subs) {
    if (j.is_whole()) continue;
    const SubgroupSet zj = subgroup_center(g, j);
    const ElementSet j_noncentral = minus(j, zj);
    if (j_noncentral.none()) continue;
    const bool j_normal_maximal = normal_maximal(j);
    for (const SubgroupSet* k : ks) {
      if (*k == j) continue;
      const SubgroupSet h = j.intersect(*k);
      const bool k_normal_maximal = normal_maximal(*k);
      if (!is_maximal_in(h, j) && !k_normal_maximal) continue;
      const ElementSet xs = j_noncentral - k->members();
      if (xs.none()) continue;
      const bool path_clause = with_paths && (is_maximal_in(h, *k) || j_normal_maximal);
      const ElementSet ys = path_clause ? minus(*k, subgroup_center(g, *k)) - j.members() : g.empty_set();
      for_each_member(xs, [&](Elem x) {
        ck.expect((graph.adjacency[x] & h.members()).any(), "no neighbour of " + s.label(x) + " in J n K");
        for_each_member(ys, [&](Elem y) {
          ck.expect((graph.adjacency[x] & graph.adjacency[y] & h.members()).any(),
                    "no path " + s.label(x) + " - J n K - " + s.label(y));
        });
      });
    }
  }
}

void normal_maximal_distance_bound(Suite& s, Checker& ck) {
  const auto& g = s.g;
  if (!s.ctx.two_generation().two_generated) return;
  const auto& maxs = s.maximals();
  const auto centres = s.maximal_centres();
  const auto& dist = s.ctx.distances();
  std::vector<bool> abelian(maxs.size()), normal(maxs.size());
  for (std::size_t i = 0; i < maxs.size(); ++i) {
    abelian[i] = is_abelian(g, maxs[i]);
    normal[i] = is_normal(g, maxs[i]);
  }
  // For each element, the maximals containing but not centralising it.
  std::vector<std::vector<std::size_t>> moving(g.order());
  for (std::size_t i = 0; i < maxs.size(); ++i) {
    for_each_member(minus(maxs[i], centres[i]), [&](Elem y) { moving[y].push_back(i); });
  }
  for (std::size_t li = 0; li < maxs.size(); ++li) {
    if (!normal[li] || abelian[li]) continue;
    const auto& l = maxs[li];
    for_each_member(minus(l, centres[li]), [&](Elem x) {
      const Elem one[] = {x};
      const bool cl_normal = is_normal(g, centralizer(g, one).intersect(l));
      for (std::size_t mi = 0; mi < maxs.size(); ++mi) {
        if (abelian[mi] || !(cl_normal || normal[mi])) continue;
        const auto& m = maxs[mi];
        for_each_member(minus(m, centres[mi]), [&](Elem y) {
          const auto d = dist(x, y);
          ck.expect(d <= 3, "d(" + s.label(x) + ", " + s.label(y) + ") above 3");
          const bool first = centres[mi].contains(x) && !l.contains(y) && moving[y].size() == 1;
          const bool second = centres[li].contains(y) && !m.contains(x) && moving[x].size() == 1;
          ck.expect((d == 3) == (first || second), "distance 3 characterisation fails at " + s.label(x) + ", " + s.label(y));
        });
      }
    });
  }
}

/// Normal non-abelian maximal M with Z(G) < Z(M), and whether every other
/// maximal meets M exactly in Z(M).
struct BigCentreMaximal {
  const SubgroupSet* m;
  SubgroupSet zm;
  bool meets_in_centre;
};

std::vector<BigCentreMaximal> big_centre_maximals(Suite& s) {
  std::vector<BigCentreMaximal> out;
  const SubgroupSet& z = s.ctx.center();
  const auto& maxs = s.maximals();
  for (const auto& m : maxs) {
    if (!is_normal(s.g, m) || is_abelian(s.g, m)) continue;
    SubgroupSet zm = subgroup_center(s.g, m);
    if (zm == z || !z.is_subset_of(zm)) continue;
    bool meets = true;
    for (const auto& k : maxs) {
      if (k != m && k.intersect(m) != zm) meets = false;
    }
    out.push_back({&m, std::move(zm), meets});
  }
  return out;
}

void normal_maximal_centre_distances(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  const SubgroupSet& z = s.ctx.center();
  const bool two_gen = s.ctx.two_generation().two_generated;
  for (const auto& b : big_centre_maximals(s)) {
    const auto& m = *b.m;
    for (const auto& k : s.maximals()) ck.expect(!is_abelian(g, k), "abelian maximal beside a large-centre M");
    const ElementSet outside = g.full_set() - m.members();
    for_each_member(minus(b.zm, z), [&](Elem zz) {
      ck.expect(graph.adjacency[zz] == outside, "neighbours of " + s.label(zz) + " differ from G \\ M");
    });
    if (!two_gen) continue;
    const auto& dist = s.ctx.distances();
    for_each_member(minus(m, b.zm), [&](Elem x) {
      auto bound = [&](Elem y) {
        const auto d = dist(x, y);
        ck.expect(unreachable(d) == b.meets_in_centre, "reachability of " + s.label(x) + ", " + s.label(y));
        if (!unreachable(d)) ck.expect(d <= 3, "d(" + s.label(x) + ", " + s.label(y) + ") above 3");
      };
      for_each_member(minus(b.zm, z), bound);
      for_each_member(outside, bound);
    });
  }
}

void normal_maximal_disconnection_iff_witness(Suite& s, Checker& ck) {
  if (!s.ctx.two_generation().two_generated) return;
  const bool connected = s.ctx.summary().component_count() == 1;
  const bool witness = assumption_22g(s.ctx).has_value();
  for (const auto& b : big_centre_maximals(s)) {
    ck.expect(!connected == b.meets_in_centre, "disconnection disagrees with K n M = Z(M)");
    ck.expect(!connected == witness, "disconnection disagrees with the Sylow witness");
  }
}

bool is_prime(std::size_t n) { return n >= 2 && prime_divisors(n) == std::vector<unsigned>{static_cast<unsigned>(n)}; }

void centre_intersection_structure(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& maxs = s.maximals();
  for (const auto& m : maxs) {
    if (!is_normal(g, m) || is_abelian(g, m)) continue;
    const SubgroupSet zm = subgroup_center(g, m);
    for (const auto& k : maxs) {
      if (k == m || k.intersect(m) != zm) continue;
      ck.expect(s.ctx.structure().is_soluble, "finite but insoluble");
      ck.expect(is_prime(k.order() / zm.order()), "|K/Z(M)| is not prime");
      ck.expect(core(g, k) == zm, "K/Z(M) is not core-free");
      for (const auto& n : s.ctx.normals()) {
        if (n == zm || !zm.is_subset_of(n)) continue;
        ck.expect(m.is_subset_of(n), "M/Z(M) is not the unique minimal normal subgroup");
      }
      for (const auto& l : maxs) {
        if (l == m) continue;
        const SubgroupSet lm = l.intersect(m);
        ck.expect(!(zm.is_subset_of(lm) && zm != lm), "a maximal meets M above Z(M)");
      }
    }
  }
}

void rmax_distance(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& maxs = s.maximals();
  const auto& dist = s.ctx.distances();
  for (const auto& m : maxs) {
    if (!is_normal(g, m) || is_abelian(g, m)) continue;
    const SubgroupSet zm = subgroup_center(g, m);
    const ElementSet xs = minus(m, zm);
    for (const auto& r : maxs) {
      if (r == m) continue;
      const SubgroupSet rm = r.intersect(m);
      if (rm == zm) continue;
      for_each_member(minus(r, m), [&](Elem y) {
        bool moved = false;
        for_each_member(rm.members(), [&](Elem c) { moved = moved || !g.commute(c, y); });
        if (!moved) return;
        for_each_member(xs, [&](Elem x) {
          ck.expect(dist(x, y) <= 3, "d(" + s.label(x) + ", " + s.label(y) + ") above 3");
        });
      });
    }
  }
}

// Two classes of maximal subgroups.

std::vector<SubgroupSet> conjugates(const FiniteGroup& g, const SubgroupSet& h) {
  std::vector<SubgroupSet> out;
  for (Elem x = 0; x < g.order(); ++x) {
    SubgroupSet c = conjugate_subgroup(g, h, x);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

void two_class_iff_sylow_decomposition(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& md = s.ctx.maximal();
  std::optional<Witness22> dec;
  for (auto& w : sylow_decompositions(s.ctx)) {
    if (w.checks.q_cyclic && w.checks.q_irreducible) {
      dec = std::move(w);
      break;
    }
  }
  ck.expect((md.classes.size() == 2) == dec.has_value(), "two classes of maximals disagree with the decomposition");
  if (!dec) return;

  std::vector<Elem> pr = dec->P.elements();
  for (Elem r : dec->R.elements()) pr.push_back(r);
  const SubgroupSet m = closure(g, pr);
  std::vector<Elem> fq = dec->phiP.elements();
  for (Elem q : dec->Q.elements()) fq.push_back(q);
  const SubgroupSet k = closure(g, fq);
  auto expected = conjugates(g, k);
  expected.push_back(m);
  std::sort(expected.begin(), expected.end());
  ck.expect(expected == md.maximals, "maximals are not PR and the conjugates of Phi(P)Q");

  const bool r_normal = is_normal(g, dec->R);
  ck.expect(r_normal == (md.frattini == m.intersect(k)), "R normal disagrees with Phi(G) = M n Phi(P)Q");
  if (!r_normal) return;
  bool direct = true;
  for (Elem a : generating_set(g, dec->P)) {
    for (Elem b : generating_set(g, dec->R)) direct = direct && g.commute(a, b);
  }
  ck.expect(direct, "M is not P x R");
  std::vector<Elem> phir = dec->phiP.elements();
  for (Elem r : dec->R.elements()) phir.push_back(r);
  ck.expect(md.frattini == closure(g, phir), "Phi(G) differs from Phi(P) x R");
  for (std::size_t i = 0; i < md.maximals.size(); ++i) {
    for (std::size_t j = i + 1; j < md.maximals.size(); ++j) {
      ck.expect(md.maximals[i].intersect(md.maximals[j]) == md.frattini, "a pair of maximals meets above Phi(G)");
    }
  }
  const SubgroupSet cm = centralizer(g, md.frattini).intersect(m);
  if (!cm.is_subset_of(md.frattini) && !is_abelian(g, m)) {
    ck.expect(md.frattini == subgroup_center(g, m), "Phi(G) differs from Z(M)");
    ck.expect(dec->phiP == subgroup_center(g, dec->P), "Phi(P) differs from Z(P)");
  }
}

void witness_link_to_normal_centraliser(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto w = assumption_22g(s.ctx);
  if (!w) return;
  ck.expect(s.ctx.two_generation().two_generated, "witness group is not 2-generated");
  std::vector<Elem> pr = w->P.elements();
  for (Elem r : w->R.elements()) pr.push_back(r);
  const SubgroupSet m = closure(g, pr);
  const SubgroupSet n = subgroup_center(g, m);
  std::vector<Elem> zr = subgroup_center(g, w->P).elements();
  for (Elem r : w->R.elements()) zr.push_back(r);
  ck.expect(n == closure(g, zr), "Z(M) differs from Z(P) x R");
  ck.expect(!n.is_subset_of(s.ctx.center()), "Z(M) is central");
  ck.expect(!s.ctx.quotient_is_cyclic(n), "G/Z(M) is cyclic");
  const SubgroupSet c = centralizer(g, n);
  ck.expect(c == m, "C_G(Z(M)) differs from M");
  ck.expect(s.ctx.quotient_is_cyclic(c) && !is_abelian(g, c), "C is abelian or G/C is non-cyclic");
  const auto& sum = s.ctx.summary();
  ck.expect(sum.component_count() == 2 && sum.diameters == std::vector<std::size_t>{2, 2},
            "witness group is not a union of two diameter-2 components");
}

// Whole-group regimes.

void nilpotent_regime(Suite& s, Checker& ck) {
  const auto& md = s.ctx.maximal();
  const bool all_normal = std::all_of(md.maximals.begin(), md.maximals.end(),
                                      [&](const SubgroupSet& m) { return is_normal(s.g, m); });
  if (!all_normal || s.ctx.graph().edge_count() == 0) return;
  const auto& sum = s.ctx.summary();
  const auto nd = sum.nd_diameter();
  ck.expect(nd == 2u || nd == 3u, "nd is not connected of diameter 2 or 3");
  if (nd == 3u) ck.expect(sum.isolated_count == 0, "nd diameter 3 with isolated vertices");
}

void trichotomy_for(GroupContext& h, Checker& ck, const std::string& which) {
  const auto& st = h.structure();
  if (h.group().is_abelian() || !st.all_proper_quotients_cyclic) return;
  const auto& hg = h.group();
  const auto& md = h.maximal();
  const bool all_normal = std::all_of(md.maximals.begin(), md.maximals.end(),
                                      [&](const SubgroupSet& m) { return is_normal(hg, m); });
  bool stabilisers_cyclic = true;
  for (std::size_t i = 0; i < md.maximals.size(); ++i) {
    if (md.cores[i].is_trivial() && !is_cyclic(hg, md.maximals[i])) stabilisers_cyclic = false;
  }
  const bool soluble_primitive =
      st.is_soluble && st.is_primitive && st.minimal_normals.size() == 1 && stabilisers_cyclic;
  bool centralisers_trivial = true;
  for (const auto& n : h.normals()) {
    if (!n.is_trivial() && !centralizer(hg, n).is_trivial()) centralisers_trivial = false;
  }
  const bool insoluble_primitive = !st.is_soluble && st.is_primitive && centralisers_trivial;
  ck.expect(all_normal + soluble_primitive + insoluble_primitive == 1, which + ": not exactly one trichotomy case");
}

void quotient_cyclic_trichotomy(Suite& s, Checker& ck) {
  trichotomy_for(s.ctx, ck, "G");
  trichotomy_for(s.ctx.central_quotient(), ck, "G/Z(G)");
}

bool soluble_primitive_quotient(GroupContext& bar) {
  const auto& st = bar.structure();
  return st.is_soluble && st.is_primitive && st.all_proper_quotients_cyclic;
}

void primitive_soluble_quotient_maximals(Suite& s, Checker& ck) {
  if (!soluble_primitive_quotient(s.ctx.central_quotient())) return;
  const SubgroupSet& z = s.ctx.center();
  for (const auto& l : s.maximals()) {
    if (is_abelian(s.g, l)) continue;
    ck.expect(is_normal(s.g, l) && subgroup_center(s.g, l).is_subset_of(z), "non-abelian maximal fails L normal, Z(L) <= Z(G)");
  }
}

void primitive_soluble_quotient_isolated(Suite& s, Checker& ck) {
  auto& bar = s.ctx.central_quotient();
  if (!soluble_primitive_quotient(bar) || s.ctx.graph().edge_count() == 0) return;
  ck.expect(bar.summary().isolated_count > 0, "graph of G/Z(G) has no isolated vertex");
  ck.expect(s.ctx.summary().nd_diameter() == 2u, "nd diameter is not 2");
}

void insoluble_primitive_quotient(Suite& s, Checker& ck) {
  auto& bar = s.ctx.central_quotient();
  const auto& st = bar.structure();
  if (st.is_soluble || !st.is_primitive || !st.all_proper_quotients_cyclic || s.ctx.central_quotient_simple()) return;
  const auto& bsum = bar.summary();
  const auto k = bsum.nd_diameter();
  ck.expect(bsum.isolated_count == 0 && (k == 2u || k == 3u), "G/Z(G) has isolated vertices or nd diameter outside 2..3");
  const auto d = s.ctx.summary().diameter();
  ck.expect(d && k && *d <= *k, "diameter of G exceeds that of G/Z(G)");
}

bool has_noncyclic_central_overquotient(GroupContext& ctx) {
  const SubgroupSet& z = ctx.center();
  for (const auto& n : ctx.normals()) {
    if (n != z && z.is_subset_of(n) && !ctx.quotient_is_cyclic(n)) return true;
  }
  return false;
}

void isolated_case_solubility(Suite& s, Checker& ck) {
  if (classify_main(s.ctx).label != CaseLabel::isolated_nd_two) return;
  if (!has_noncyclic_central_overquotient(s.ctx)) return;
  ck.expect(s.ctx.structure().is_soluble, "isolated case with non-cyclic quotient but insoluble");
}

// Normal non-central subgroups with non-cyclic quotient.

void non_cyclic_quotient_edge_rule(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  const SubgroupSet& z = s.ctx.center();
  for (const auto& n : s.ctx.normals()) {
    if (n.is_subset_of(z) || s.ctx.quotient_is_cyclic(n)) continue;
    for_each_member(minus(n, z), [&](Elem x) {
      for_each_member(graph.vertices, [&](Elem y) {
        if (x == y) return;
        ck.expect(graph.adjacent(x, y) == !g.commute(x, y), "edge rule fails at " + s.label(x) + ", " + s.label(y));
      });
    });
  }
}

void quotient_lift_diameter(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  for (const auto& n : s.ctx.normals()) {
    if (n.is_trivial() || n.is_whole() || n.order() > s.opt.quotient_normal_order_limit) continue;
    Quotient q = quotient(g, n);
    GroupContext qctx(std::move(q.group), s.ctx.lattice_cap(), s.ctx.full_bfs());
    const auto& qsum = qctx.summary();
    for (std::size_t c = 0; c < qsum.components.size(); ++c) {
      if (qsum.components[c].count() < 2) continue;
      ElementSet lift = g.empty_set();
      for_each_member(graph.vertices, [&](Elem x) {
        if (qsum.components[c].test(q.projection[x])) lift.set(x);
      });
      const auto sum = component_summary(g, induced_subgraph(graph, lift), true);
      const auto d = sum.diameter();
      ck.expect(d && *d <= qsum.diameters[c],
                "lift of a component of G/N with " + order_tag("|N|", n) + " exceeds its diameter");
    }
  }
}

void common_neighbour_in_normal_subgroup(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  const SubgroupSet& z = s.ctx.center();
  const auto& dist = s.ctx.distances();
  const auto witnesses = assumption_nc_witnesses(s.ctx);
  std::vector<int> noncyclic(g.order(), -1);
  auto quotient_noncyclic = [&](Elem x) {
    if (noncyclic[x] < 0) noncyclic[x] = s.noncyclic_closure_quotient(x);
    return noncyclic[x] == 1;
  };
  for (const auto& w : witnesses) {
    const ElementSet n_vertices = minus(w.N, z);
    const auto outside = to_vector(g.full_set() - w.C.members());
    for (std::size_t i = 0; i < outside.size(); ++i) {
      for (std::size_t j = i; j < outside.size(); ++j) {
        const Elem h = outside[i], h2 = outside[j];
        ck.expect((graph.adjacency[h] & graph.adjacency[h2] & n_vertices).any(),
                  "no common neighbour in N for " + s.label(h) + ", " + s.label(h2));
      }
    }
    for_each_member(minus(w.C, z), [&](Elem c) {
      for_each_member(graph.vertices, [&](Elem y) {
        const auto d = dist(c, y);
        if (d <= 2) return;
        const bool cc = !quotient_noncyclic(c), cy = !quotient_noncyclic(y);
        ck.expect((cc && cy) || ((cc || cy) && g.commute(c, y)),
                  "far pair " + s.label(c) + ", " + s.label(y) + " has a non-cyclic closure quotient");
      });
    });
  }
}

void overgroups_of_centraliser(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const SubgroupSet& z = s.ctx.center();
  for (const auto& w : assumption_nc_witnesses(s.ctx)) {
    if (!s.ctx.quotient_is_cyclic(w.C)) continue;
    const SubgroupSet zc = subgroup_center(g, w.C);
    ck.expect(z.is_subset_of(zc) && z != zc, "Z(G) not strictly inside Z(C)");
    for (const auto& h : s.ctx.lattice().subgroups()) {
      if (h == w.C || !w.C.is_subset_of(h)) continue;
      const SubgroupSet zh = subgroup_center(g, h);
      ck.expect(!is_abelian(g, h), "abelian overgroup of C");
      ck.expect(zh.is_subset_of(zc) && zh != zc, "Z(H) not strictly inside Z(C)");
      ck.expect(is_normal(g, h), "non-normal overgroup of C");
    }
  }
}

void component_is_centraliser_minus_centre(Suite& s, Checker& ck) {
  const auto& g = s.g;
  if (!s.ctx.two_generation().two_generated) return;
  const auto& sum = s.ctx.summary();
  const auto& maxs = s.maximals();
  for (const auto& w : assumption_nc_witnesses(s.ctx)) {
    if (!s.ctx.quotient_is_cyclic(w.C) || is_abelian(g, w.C)) continue;
    const SubgroupSet zc = subgroup_center(g, w.C);
    bool meets = std::find(maxs.begin(), maxs.end(), w.C) != maxs.end();
    for (const auto& k : maxs) {
      if (k != w.C && k.intersect(w.C) != zc) meets = false;
    }
    const bool disconnected = sum.component_count() != 1;
    ck.expect(disconnected == meets, "disconnection disagrees with C maximal and K n C = Z(C)");
    if (!disconnected) continue;
    const ElementSet part = minus(w.C, zc);
    const bool found = std::any_of(sum.components.begin(), sum.components.end(),
                                   [&](const ElementSet& c) { return c == part; });
    ck.expect(found && sum.diameters == std::vector<std::size_t>{2, 2}, "components are not C \\ Z(C) and its complement");
  }
}

void nc_summary_tables(Suite& s, Checker& ck) {
  if (!assumption_nc_witness(s.ctx)) return;
  ck.absorb(ncsummary_verify(s.ctx));
}

// Engine invariants and top-level characterisations.

void conjugation_is_graph_automorphism(Suite& s, Checker& ck) {
  const auto& g = s.g;
  const auto& graph = s.ctx.graph();
  for (Elem a : g.generators()) {
    for_each_member(graph.vertices, [&](Elem x) {
      const Elem xa = g.conjugate(x, a);
      bool ok = graph.is_vertex(xa) && graph.degree(xa) == graph.degree(x);
      for_each_member(graph.adjacency[x], [&](Elem y) { ok = ok && graph.adjacent(xa, g.conjugate(y, a)); });
      ck.expect(ok, "conjugation by " + s.label(a) + " breaks adjacency at " + s.label(x));
    });
  }
}

void adjacency_oracle_agreement(Suite& s, Checker& ck) {
  const auto& g = s.g;
  if (g.order() > s.opt.oracle_order_limit) {
    ck.skip("order above " + std::to_string(s.opt.oracle_order_limit));
    return;
  }
  const auto& graph = s.ctx.graph();
  const auto& nc = s.ctx.graph(GraphKind::non_commuting);
  const auto& ng = s.ctx.graph(GraphKind::non_generating);
  const GroupGraph by_closure = build_graph(g, GraphKind::ncng, nullptr);
  for_each_member(graph.vertices, [&](Elem x) {
    ck.expect(graph.adjacency[x] == by_closure.adjacency[x], "closure and maximal oracles differ at " + s.label(x));
    ck.expect(graph.adjacency[x] == (nc.adjacency[x] & ng.adjacency[x]), "ncng row is not nc and ng at " + s.label(x));
    ck.expect(!graph.adjacent(x, x), "self-loop at " + s.label(x));
    bool symmetric = true;
    for_each_member(graph.adjacency[x], [&](Elem y) { symmetric = symmetric && graph.adjacent(y, x); });
    ck.expect(symmetric, "asymmetric row at " + s.label(x));
  });
}

void no_infinite_only_cases(Suite& s, Checker& ck) {
  const auto label = classify_main(s.ctx).label;
  ck.expect(label != CaseLabel::insoluble_primitive_quotient && label != CaseLabel::connected_four,
            "infinite-only case reported: " + to_string(label));
  if (label == CaseLabel::out_of_scope_simple_quotient) return;
  for (std::size_t d : s.ctx.summary().diameters) ck.expect(d <= 3, "component of diameter " + std::to_string(d));
}

void case_labels_exhaustive(Suite& s, Checker& ck) {
  const auto r = classify_main(s.ctx);
  ck.expect(r.label != CaseLabel::unmatched, "no case matches");
  ck.expect(r.consistent, "label " + to_string(r.label) + " inconsistent with the graph");
}

void sumtwo_biconditional(Suite& s, Checker& ck) {
  const auto r = sumtwo_crosscheck(s.ctx);
  ck.expect(r.agree(), "graph side " + std::to_string(r.lhs) + " vs structure side " + std::to_string(r.rhs));
}

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> table{
      {"no_component_of_diameter_one", false, no_component_of_diameter_one},
      {"not_two_generated_diameter_two", false, not_two_generated_diameter_two},
      {"isolated_iff_unique_maximal_centre", true, isolated_iff_unique_maximal_centre},
      {"proper_subgroup_diameter_two", true, proper_subgroup_diameter_two},
      {"non_commuting_graph_diameter_two", false, non_commuting_graph_diameter_two},
      {"isolated_unique_maximal_abelian", true, isolated_unique_maximal_abelian},
      {"no_edge_iff_proper_subgroups_abelian", true, no_edge_iff_proper_subgroups_abelian},
      {"ore_equivalences", true, ore_equivalences},
      {"frattini_is_intersection", true, frattini_is_intersection},
      {"frattini_is_non_generators", true, frattini_is_non_generators},
      {"overgroup_centre_in_intersection", true, overgroup_centre_in_intersection},
      {"three_maximal_intersection", true, three_maximal_intersection},
      {"centre_maximal_edges", true, centre_maximal_edges},
      {"normal_maximal_distance_bound", true, normal_maximal_distance_bound},
      {"normal_maximal_centre_distances", true, normal_maximal_centre_distances},
      {"normal_maximal_disconnection_iff_witness", true, normal_maximal_disconnection_iff_witness},
      {"centre_intersection_structure", true, centre_intersection_structure},
      {"rmax_distance", true, rmax_distance},
      {"two_class_iff_sylow_decomposition", true, two_class_iff_sylow_decomposition},
      {"witness_link_to_normal_centraliser", false, witness_link_to_normal_centraliser},
      {"nilpotent_regime", true, nilpotent_regime},
      {"quotient_cyclic_trichotomy", true, quotient_cyclic_trichotomy},
      {"primitive_soluble_quotient_maximals", true, primitive_soluble_quotient_maximals},
      {"primitive_soluble_quotient_isolated", true, primitive_soluble_quotient_isolated},
      {"insoluble_primitive_quotient", true, insoluble_primitive_quotient},
      {"isolated_case_solubility", true, isolated_case_solubility},
      {"non_cyclic_quotient_edge_rule", true, non_cyclic_quotient_edge_rule},
      {"quotient_lift_diameter", true, quotient_lift_diameter},
      {"common_neighbour_in_normal_subgroup", true, common_neighbour_in_normal_subgroup},
      {"overgroups_of_centraliser", true, overgroups_of_centraliser},
      {"component_is_centraliser_minus_centre", true, component_is_centraliser_minus_centre},
      {"nc_summary_tables", true, nc_summary_tables},
      {"conjugation_is_graph_automorphism", false, conjugation_is_graph_automorphism},
      {"adjacency_oracle_agreement", false, adjacency_oracle_agreement},
      {"no_infinite_only_cases", false, no_infinite_only_cases},
      {"case_labels_exhaustive", false, case_labels_exhaustive},
      {"sumtwo_biconditional", false, sumtwo_biconditional},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& lemma_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : check_table()) out.push_back(def.name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> lemma_suite(GroupContext& ctx, const SuiteOptions& options) {
  Suite suite{ctx, options, ctx.group()};
  std::vector<CheckResult> out;
  for (const auto& def : check_table()) {
    Checker ck(def.name);
    if (def.needs_lattice && !ctx.lattice_available()) {
      ck.skip("lattice unavailable above order " + std::to_string(ctx.lattice_cap()));
    } else {
      def.run(suite, ck);
    }
    out.push_back(ck.finish());
  }
  return out;
}

}  // namespace ncng

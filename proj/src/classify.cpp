#include "ncng/classify.hpp"

#include "ncng/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ncng {

namespace {

constexpr std::array<std::pair<CaseLabel, std::string_view>, 8> kLabelNames{{
    {CaseLabel::isolated_nd_two, "T12-i"},
    {CaseLabel::insoluble_primitive_quotient, "T12-ii"},
    {CaseLabel::connected_two_or_three, "T12-iii"},
    {CaseLabel::connected_four, "T12-iv"},
    {CaseLabel::two_components, "T12-v"},
    {CaseLabel::no_edge, "no-edge"},
    {CaseLabel::out_of_scope_simple_quotient, "out-of-scope-simple-quotient"},
    {CaseLabel::unmatched, "unmatched"},
}};

bool is_two_diameter_two(const ComponentSummary& s) {
  return s.component_count() == 2 && s.diameters[0] == 2 && s.diameters[1] == 2;
}

bool has_component(const ComponentSummary& s, const ElementSet& set) {
  return std::any_of(s.components.begin(), s.components.end(), [&](const ElementSet& c) { return c == set; });
}

bool is_maximal(const MaximalData& md, const SubgroupSet& h) {
  return std::find(md.maximals.begin(), md.maximals.end(), h) != md.maximals.end();
}

std::string describe(const FiniteGroup& g, Elem x, Elem y, unsigned d) {
  std::ostringstream out;
  out << "d(" << g.label(x) << ", " << g.label(y) << ") = ";
  if (d == DistanceMatrix::kUnreachable) {
    out << "inf";
  } else {
    out << d;
  }
  return out.str();
}

/// Distance bounds between the parts of a partition of G \ Z(G).
/// bounds[i][j] (j <= i) bounds d(x, y) for x in regions[i], y in regions[j].
struct RegionTable {
  std::string name;
  std::vector<ElementSet> regions;
  std::vector<std::vector<unsigned>> bounds;
};

void check_region_table(Checker& ck, GroupContext& ctx, const RegionTable& table) {
  const auto& g = ctx.group();
  const auto& graph = ctx.graph();
  const auto& dist = ctx.distances();
  ElementSet covered(g.order());
  std::size_t total = 0;
  for (const auto& r : table.regions) {
    covered |= r;
    total += r.count();
  }
  if (!ck.expect(covered == graph.vertices && total == graph.vertex_count(),
                 table.name + ": regions do not partition the vertex set")) {
    return;
  }
  for (std::size_t i = 0; i < table.regions.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const unsigned bound = table.bounds[i][j];
      for_each_member(table.regions[i], [&](Elem x) {
        for_each_member(table.regions[j], [&](Elem y) {
          if (x == y) return;
          const unsigned d = dist(x, y);
          ck.expect(d <= bound, table.name + " region (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") bound " + std::to_string(bound) + ": " + describe(g, x, y, d));
        });
      });
    }
  }
}

ElementSet minus(const SubgroupSet& a, const SubgroupSet& b) { return a.members() - b.members(); }

}  // namespace

std::size_t Witness22Checks::passed() const {
  return static_cast<std::size_t>(q_cyclic) + q_irreducible + phiP_eq_ZP + ZP_not_central + R_normal;
}

SubgroupSet p_group_frattini(const FiniteGroup& g, const SubgroupSet& p_group, unsigned p) {
  const auto p_gens = generating_set(g, p_group);
  ElementSet seed = g.empty_set();
  for_each_member(p_group.members(), [&](Elem x) {
    seed.set(g.pow(x, p));
    for (Elem y : p_gens) seed.set(g.commutator(x, y));
  });
  SubgroupSet f = closure(g, seed);
  // Normal closure in P.
  bool grown = true;
  while (grown) {
    grown = false;
    for (Elem h : generating_set(g, f)) {
      for (Elem a : p_gens) {
        const Elem c = g.conjugate(h, a);
        if (!f.contains(c)) {
          f = join(g, f, generating_set(g, f), c);
          grown = true;
        }
      }
    }
  }
  return f;
}

bool acts_irreducibly(const FiniteGroup& g, const SubgroupSet& p_group, const SubgroupSet& phi,
                      const std::vector<Elem>& actors) {
  const ElementSet candidates = minus(p_group, phi);
  bool irreducible = true;
  for_each_member(candidates, [&](Elem x) {
    if (!irreducible) return;
    ElementSet orbit = phi.members();
    std::vector<Elem> queue{x};
    orbit.set(x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Elem a : actors) {
        const Elem c = g.conjugate(queue[i], a);
        if (!orbit.test(c)) {
          orbit.set(c);
          queue.push_back(c);
        }
      }
    }
    if (closure(g, orbit) != p_group) irreducible = false;
  });
  return irreducible;
}

std::vector<Witness22> sylow_decompositions(GroupContext& ctx) {
  const auto& g = ctx.group();
  const auto primes = prime_divisors(g.order());
  std::vector<Witness22> out;
  if (primes.size() != 2) return out;
  const SubgroupSet& z = ctx.center();
  for (int first = 0; first < 2; ++first) {
    Witness22 w;
    w.p = primes[first];
    w.q = primes[1 - first];
    w.P = sylow(g, w.p);
    if (!is_normal(g, w.P)) continue;
    w.Q = sylow(g, w.q);
    w.phiP = p_group_frattini(g, w.P, w.p);
    w.R = p_group_frattini(g, w.Q, w.q);
    const SubgroupSet zp = subgroup_center(g, w.P);
    w.checks.q_cyclic = is_cyclic(g, w.Q);
    w.checks.q_irreducible = acts_irreducibly(g, w.P, w.phiP, generating_set(g, w.Q));
    w.checks.phiP_eq_ZP = w.phiP == zp;
    w.checks.ZP_not_central = !zp.is_subset_of(z);
    w.checks.R_normal = is_normal(g, w.R);
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<Witness22> evaluate_22g_candidate(GroupContext& ctx) {
  auto all = sylow_decompositions(ctx);
  std::optional<Witness22> best;
  for (auto& w : all) {
    if (!best || w.checks.passed() > best->checks.passed() ||
        (w.checks.passed() == best->checks.passed() && w.p < best->p)) {
      best = std::move(w);
    }
  }
  return best;
}

std::optional<Witness22> assumption_22g(GroupContext& ctx) {
  for (auto& w : sylow_decompositions(ctx)) {
    if (w.checks.all()) return std::move(w);
  }
  return std::nullopt;
}

std::string to_string(CaseLabel label) {
  for (const auto& [l, name] : kLabelNames) {
    if (l == label) return std::string(name);
  }
  return "unmatched";
}

std::optional<CaseLabel> parse_case_label(std::string_view text) {
  for (const auto& [l, name] : kLabelNames) {
    if (name == text) return l;
  }
  return std::nullopt;
}

ClassificationReport classify_main(GroupContext& ctx) {
  ClassificationReport r;
  const auto& graph = ctx.graph();
  const auto& s = ctx.summary();
  const bool isolated = s.isolated_count > 0;
  const auto nd = s.nd_diameter();
  const bool connected = s.component_count() == 1;
  const auto diam = s.diameter();
  r.is_22group = is_two_diameter_two(s);

  if (ctx.central_quotient_simple()) {
    r.label = CaseLabel::out_of_scope_simple_quotient;
  } else if (graph.edge_count() == 0) {
    r.label = CaseLabel::no_edge;
  } else if (isolated && nd == 2u) {
    r.label = CaseLabel::isolated_nd_two;
  } else if (!isolated && connected && (diam == 2u || diam == 3u)) {
    r.label = CaseLabel::connected_two_or_three;
  } else if (r.is_22group) {
    r.label = CaseLabel::two_components;
  } else if (isolated && (nd == 3u || nd == 4u)) {
    r.label = CaseLabel::insoluble_primitive_quotient;
  } else if (!isolated && connected && diam == 4u) {
    r.label = CaseLabel::connected_four;
  } else {
    r.label = CaseLabel::unmatched;
  }

  switch (r.label) {
    case CaseLabel::isolated_nd_two: r.consistent = isolated && nd == 2u; break;
    case CaseLabel::connected_two_or_three: r.consistent = connected && diam >= 2u && diam <= 3u; break;
    case CaseLabel::two_components: r.consistent = r.is_22group && !isolated; break;
    case CaseLabel::no_edge: r.consistent = graph.edge_count() == 0; break;
    case CaseLabel::out_of_scope_simple_quotient: r.consistent = true; break;
    // The remaining labels need an infinite group, so they are never consistent here.
    default: r.consistent = false; break;
  }

  r.witness = evaluate_22g_candidate(ctx);
  std::ostringstream out;
  out << "components=" << s.component_count() << " isolated=" << s.isolated_count;
  if (diam) out << " diameter=" << *diam;
  if (nd) out << " nd_diameter=" << *nd;
  r.evidence.push_back(out.str());
  if (r.witness) {
    std::ostringstream w;
    w << "sylow p=" << r.witness->p << " |P|=" << r.witness->P.order() << " |Q|=" << r.witness->Q.order()
      << " |R|=" << r.witness->R.order() << " checks=" << r.witness->checks.passed() << "/5";
    r.evidence.push_back(w.str());
  }
  return r;
}

SumTwoResult sumtwo_crosscheck(GroupContext& ctx) {
  SumTwoResult r;
  const auto& s = ctx.summary();
  r.lhs = is_two_diameter_two(s) && s.isolated_count == 0;
  r.rhs = assumption_22g(ctx).has_value();
  return r;
}

std::vector<NcWitness> assumption_nc_witnesses(GroupContext& ctx) {
  std::vector<NcWitness> out;
  const auto& g = ctx.group();
  const SubgroupSet& z = ctx.center();
  for (const auto& n : ctx.normals()) {
    if (n.is_subset_of(z) || ctx.quotient_is_cyclic(n)) continue;
    out.push_back({n, centralizer(g, n)});
  }
  return out;
}

std::optional<NcWitness> assumption_nc_witness(GroupContext& ctx) {
  auto all = assumption_nc_witnesses(ctx);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

CheckResult ncsummary_verify(GroupContext& ctx) {
  const auto witnesses = assumption_nc_witnesses(ctx);
  if (witnesses.empty()) throw NoWitness("no normal non-central subgroup with non-cyclic quotient");

  Checker ck("nc_summary_tables");
  const auto& g = ctx.group();
  const auto& graph = ctx.graph();
  const auto& s = ctx.summary();
  const auto& dist = ctx.distances();
  const auto& md = ctx.maximal();
  const SubgroupSet& z = ctx.center();
  const bool two_gen = ctx.two_generation().two_generated;
  const bool full_witness = assumption_22g(ctx).has_value();
  const bool soluble = ctx.structure().is_soluble;
  const bool connected = s.component_count() == 1;
  const auto diam = s.diameter();

  ElementSet isolated = graph.vertices - s.nd_vertices;
  const bool case_isolated = isolated.any() && s.nd_diameter() == 2u;
  const bool case_connected = connected && diam >= 2u && diam <= 4u;
  const bool case_two = is_two_diameter_two(s);

  for (const auto& w : witnesses) {
    const SubgroupSet& n = w.N;
    const SubgroupSet& c = w.C;
    const std::string tag = "|N|=" + std::to_string(n.order()) + " |C|=" + std::to_string(c.order());
    const bool c_abelian = is_abelian(g, c);
    const bool c_maximal = is_maximal(md, c);
    const SubgroupSet zc = subgroup_center(g, c);

    // Which conclusion holds, and the structure it promises.
    ck.expect(case_isolated + case_connected + case_two == 1, tag + ": graph matches no unique case");
    if (case_isolated) {
      ck.expect(soluble && c_abelian && c_maximal, tag + ": isolated case without soluble G and abelian maximal C");
      ck.expect(isolated.is_subset_of(minus(c, n)), tag + ": isolated vertex outside C \\ N");
    }
    if (case_connected) ck.expect(diam != 4u, tag + ": diameter 4 in a finite group");
    if (case_two) {
      ck.expect(!c_abelian && c_maximal, tag + ": two components without non-abelian maximal C");
      ck.expect(has_component(s, minus(c, zc)), tag + ": no component equals C \\ Z(C)");
    }
    ck.expect(case_two == full_witness, tag + ": two components disagree with the Sylow witness");

    if (!two_gen) {
      ck.expect(connected && diam == 2u, tag + ": not 2-generated but diameter is not 2");
      continue;
    }

    if (!ctx.quotient_is_cyclic(c)) {
      ck.expect(connected && (diam == 2u || diam == 3u), tag + ": G/C non-cyclic but diameter not 2 or 3");
      const ElementSet nc = n.members() | c.members();
      for_each_member(graph.vertices, [&](Elem x) {
        for_each_member(graph.vertices, [&](Elem y) {
          if (y <= x || dist(x, y) != 3) return;
          const bool placed = (c.contains(x) && !nc.test(y)) || (c.contains(y) && !nc.test(x));
          ck.expect(placed && g.commute(x, y), tag + ": distance-3 pair misplaced, " + describe(g, x, y, 3));
        });
      });
      bool centralisers_inside = true;
      for_each_member(minus(c, z), [&](Elem x) {
        const Elem one[] = {x};
        if (!centralizer(g, one).members().is_subset_of(nc)) centralisers_inside = false;
      });
      if (centralisers_inside) ck.expect(diam == 2u, tag + ": centralisers inside N u C but diameter not 2");
      continue;
    }

    // G/C cyclic: every proper overgroup of C is non-abelian and normal with a smaller centre.
    ck.expect(z.is_subset_of(zc) && z != zc, tag + ": Z(G) not strictly inside Z(C)");
    for (const auto& h : ctx.lattice().subgroups()) {
      if (h == c || !c.is_subset_of(h)) continue;
      const SubgroupSet zh = subgroup_center(g, h);
      ck.expect(!is_abelian(g, h) && is_normal(g, h) && zh.is_subset_of(zc) && zh != zc,
                tag + ": overgroup of order " + std::to_string(h.order()) + " breaks the overgroup rule");
    }
    std::vector<const SubgroupSet*> overmax;
    for (const auto& m : md.maximals) {
      if (m != c && c.is_subset_of(m)) overmax.push_back(&m);
    }

    if (c_abelian) {
      ck.expect(isolated.is_subset_of(minus(c, n)), tag + ": isolated vertex outside C \\ N");
      if (c_maximal) {
        ck.expect(s.nd_diameter() == 2u, tag + ": C abelian maximal but nd diameter not 2");
        continue;
      }
      ck.expect(connected && diam <= 3u, tag + ": C abelian non-maximal but diameter above 3");
      for (const SubgroupSet* m : overmax) {
        const SubgroupSet zm = subgroup_center(g, *m);
        ck.expect(z.is_subset_of(zm) && zm.is_subset_of(c), tag + ": region chain broken");
        check_region_table(ck, ctx,
                           {"abelian-centraliser table",
                            {minus(zm, z), minus(c, zm), minus(*m, c), g.full_set() - m->members()},
                            {{2}, {3, 2}, {3, 2, 2}, {1, 3, 2, 2}}});
      }
      continue;
    }

    bool meets_in_centre = c_maximal;
    for (const auto& k : md.maximals) {
      if (k != c && k.intersect(c) != zc) meets_in_centre = false;
    }
    ck.expect(connected != meets_in_centre, tag + ": connectivity disagrees with K n C = Z(C)");
    if (!connected) {
      ck.expect(case_two && has_component(s, minus(c, zc)), tag + ": disconnected without the C \\ Z(C) component");
    }
    ck.expect(!connected == full_witness, tag + ": disconnection disagrees with the Sylow witness");
    if (!c_maximal) {
      ck.expect(connected && diam <= 3u, tag + ": C non-abelian non-maximal but diameter above 3");
      for (const SubgroupSet* m : overmax) {
        const SubgroupSet zm = subgroup_center(g, *m);
        ck.expect(z.is_subset_of(zm) && zm.is_subset_of(zc), tag + ": region chain broken");
        check_region_table(ck, ctx,
                           {"non-abelian-centraliser table",
                            {minus(zm, z), minus(zc, zm), minus(c, zc), minus(*m, c), g.full_set() - m->members()},
                            {{2}, {2, 2}, {3, 2, 2}, {3, 2, 2, 2}, {1, 3, 3, 2, 2}}});
      }
    } else if (connected) {
      ck.expect(diam <= 3u, tag + ": C maximal non-abelian but diameter above 3");
      check_region_table(ck, ctx,
                         {"maximal-centraliser table",
                          {minus(zc, z), minus(c, zc), g.full_set() - c.members()},
                          {{2}, {3, 2}, {1, 3, 2}}});
    }
  }
  return ck.finish();
}

}  // namespace ncng

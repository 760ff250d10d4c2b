#pragma once

#include "ncng/check.hpp"
#include "ncng/context.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncng {

struct Witness22Checks {
  bool q_cyclic = false;
  bool q_irreducible = false;
  bool phiP_eq_ZP = false;
  bool ZP_not_central = false;
  bool R_normal = false;

  bool all() const { return q_cyclic && q_irreducible && phiP_eq_ZP && ZP_not_central && R_normal; }
  std::size_t passed() const;
};

/// A decomposition G = P:Q with P a normal Sylow p-subgroup and Q a Sylow
/// q-subgroup, |G| = p^a q^b, together with the two-component conditions.
struct Witness22 {
  unsigned p = 0;
  unsigned q = 0;
  SubgroupSet P;
  SubgroupSet Q;
  SubgroupSet R;  // Frattini subgroup of Q; its unique maximal when Q is cyclic
  SubgroupSet phiP;
  Witness22Checks checks;
};

/// Frattini subgroup of a p-group, computed as the normal closure of the
/// p-th powers and commutators. Does not need the lattice.
SubgroupSet p_group_frattini(const FiniteGroup& g, const SubgroupSet& p_group, unsigned p);

/// Whether the elements `actors` leave no subgroup strictly between
/// Phi(P) and P invariant under conjugation.
bool acts_irreducibly(const FiniteGroup& g, const SubgroupSet& p_group, const SubgroupSet& phi,
                      const std::vector<Elem>& actors);

/// Every ordering (p, q) of the two prime divisors with a normal Sylow
/// p-subgroup. Empty unless |G| has exactly two prime divisors.
std::vector<Witness22> sylow_decompositions(GroupContext& ctx);
/// The decomposition with the most checks passing; ties go to the smaller p.
std::optional<Witness22> evaluate_22g_candidate(GroupContext& ctx);
/// A decomposition passing all five checks, if any.
std::optional<Witness22> assumption_22g(GroupContext& ctx);

enum class CaseLabel {
  isolated_nd_two,
  insoluble_primitive_quotient,
  connected_two_or_three,
  connected_four,
  two_components,
  no_edge,
  out_of_scope_simple_quotient,
  unmatched,
};

std::string to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

struct ClassificationReport {
  CaseLabel label = CaseLabel::unmatched;
  bool is_22group = false;  // graph side: exactly two components of diameter 2
  std::optional<Witness22> witness;  // best Sylow decomposition, if any
  bool consistent = false;  // label agrees with the component summary
  std::vector<std::string> evidence;
};

/// Label from the graph first, then attach structural evidence.
ClassificationReport classify_main(GroupContext& ctx);

struct SumTwoResult {
  bool lhs = false;  // graph has exactly two components, each of diameter 2
  bool rhs = false;  // a full Sylow witness exists
  bool agree() const { return lhs == rhs; }
};

SumTwoResult sumtwo_crosscheck(GroupContext& ctx);

/// A normal N with G/N non-cyclic and N not central, with C = C_G(N).
struct NcWitness {
  SubgroupSet N;
  SubgroupSet C;
};

/// All such pairs in canonical order of N.
std::vector<NcWitness> assumption_nc_witnesses(GroupContext& ctx);
std::optional<NcWitness> assumption_nc_witness(GroupContext& ctx);

/// Regime analysis for every normal non-central N with non-cyclic quotient:
/// case-vs-structure agreement and the region-wise distance bounds. Throws
/// NoWitness when there is no such N.
CheckResult ncsummary_verify(GroupContext& ctx);

}  // namespace ncng

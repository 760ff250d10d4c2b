#pragma once

#include "ncng/check.hpp"
#include "ncng/context.hpp"

#include <string>
#include <vector>

namespace ncng {

struct SuiteOptions {
  /// Non-generator characterisation of the Frattini subgroup.
  std::size_t frattini_order_limit = 48;
  /// Closure-based adjacency recomputation.
  std::size_t oracle_order_limit = 500;
  /// Quotients G/N are lifted for normal N up to this order.
  std::size_t quotient_normal_order_limit = 8;
  /// Path-existence checks that range over pairs of subgroups and element pairs.
  std::size_t path_order_limit = 256;
  /// Subgroup pairs (J, K) range over the whole lattice up to this lattice size, else K is maximal.
  std::size_t pair_lattice_limit = 60;
};

/// Names of every check, in the order lemma_suite reports them.
const std::vector<std::string>& lemma_suite_names();

/// Runs every structural and graph property check on G. Checks whose
/// hypotheses never instantiate are vacuous; checks needing the lattice are
/// skipped when it is unavailable.
std::vector<CheckResult> lemma_suite(GroupContext& ctx, const SuiteOptions& options = {});

}  // namespace ncng

#pragma once

#include "ncng/finite_group.hpp"
#include "ncng/group_spec.hpp"

#include <cstddef>

namespace ncng {

struct ConstructOptions {
  std::size_t max_order = 5000;
  /// Run verify_group_axioms on the result (exhaustive associativity up to order 512).
  bool verify_axioms = false;
};

/// Builds the group described by `spec`. Elements are numbered in
/// breadth-first order of right multiplication by the generators, which are
/// taken in spec order. Throws OrderCapExceeded, InvalidAction, InvalidSpec.
FiniteGroup construct(const GroupSpec& spec, const ConstructOptions& options = {});

}  // namespace ncng

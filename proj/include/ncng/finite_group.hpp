#pragma once

#include "ncng/element_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncng {

/// A finite group given by its full Cayley table on dense indices.
/// Element 0 is the identity. Immutable after construction.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 65535;

  FiniteGroup(std::size_t order, std::vector<std::uint16_t> table, std::vector<std::string> labels,
              std::vector<Elem> generators);

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }

  const std::string& label(Elem g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  /// Generators recorded by the construction, in construction order.
  std::span<const Elem> generators() const { return generators_; }

  Elem pow(Elem g, long long exponent) const;
  std::size_t element_order(Elem g) const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  /// [x,y] = x^-1 y^-1 x y.
  Elem commutator(Elem x, Elem y) const;
  /// x^g = g^-1 x g.
  Elem conjugate(Elem x, Elem g) const;
  bool is_abelian() const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const { return ElementSet(order_).set(); }
  SubgroupSet whole() const { return SubgroupSet(full_set()); }
  SubgroupSet trivial() const;

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
};

/// Checks the Latin-square, identity and inverse invariants always, and
/// associativity exhaustively up to `exhaustive_limit` (sampled above it).
/// Throws NotClosed on the first violation.
void verify_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 512,
                         std::size_t samples = 100000);

SubgroupSet center(const FiniteGroup& g);
/// Elements commuting with every member of `s` (G itself for an empty set).
SubgroupSet centralizer(const FiniteGroup& g, std::span<const Elem> s);
SubgroupSet centralizer(const FiniteGroup& g, const SubgroupSet& h);
/// Z(H) for a subgroup H.
SubgroupSet subgroup_center(const FiniteGroup& g, const SubgroupSet& h);

struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // each sorted; classes ordered by first member
  std::vector<std::uint32_t> class_of;
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  // element of G -> coset index
};
/// G/N with cosets numbered by their smallest member. Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const SubgroupSet& n);

}  // namespace ncng

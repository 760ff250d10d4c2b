#pragma once

#include "ncng/finite_group.hpp"

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncng {

/// Smallest subgroup containing `seed`.
SubgroupSet closure(const FiniteGroup& g, std::span<const Elem> seed);
SubgroupSet closure(const FiniteGroup& g, const ElementSet& seed);

/// <H, x> for a subgroup H generated by `h_generators`, by Dimino's coset method.
SubgroupSet join(const FiniteGroup& g, const SubgroupSet& h, std::span<const Elem> h_generators, Elem x);

/// A small generating set of H, chosen greedily in index order.
std::vector<Elem> generating_set(const FiniteGroup& g, const SubgroupSet& h);

bool is_normal(const FiniteGroup& g, const SubgroupSet& h);
bool is_abelian(const FiniteGroup& g, const SubgroupSet& h);
bool is_cyclic(const FiniteGroup& g, const SubgroupSet& h);

SubgroupSet conjugate_subgroup(const FiniteGroup& g, const SubgroupSet& h, Elem x);
SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& h);
/// Largest normal subgroup of G inside H.
SubgroupSet core(const FiniteGroup& g, const SubgroupSet& h);
SubgroupSet derived_subgroup(const FiniteGroup& g, const SubgroupSet& h);
/// HK as a set of elements (not necessarily a subgroup).
ElementSet product_set(const FiniteGroup& g, const SubgroupSet& h, const SubgroupSet& k);

inline constexpr std::size_t kDefaultLatticeCap = 1000;

/// Every subgroup of G, sorted canonically, with a membership index.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  explicit SubgroupLattice(std::vector<SubgroupSet> subgroups);

  const std::vector<SubgroupSet>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }
  const SubgroupSet& operator[](std::size_t i) const { return subgroups_[i]; }
  std::optional<std::size_t> index_of(const ElementSet& members) const;

 private:
  std::vector<SubgroupSet> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Cyclic seeds joined pairwise to a fixed point, one conjugacy-class
/// representative at a time. Throws LatticeCapExceeded when |G| > cap.
SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t lattice_cap = kDefaultLatticeCap);

/// Subgroups of H, taken from the lattice of G.
std::vector<SubgroupSet> subgroups_of(const SubgroupLattice& lattice, const SubgroupSet& h);

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice);

struct MaximalData {
  std::vector<SubgroupSet> maximals;            // canonical order
  std::vector<std::vector<std::size_t>> classes;  // indices into maximals
  std::vector<SubgroupSet> cores;               // per maximal
  SubgroupSet frattini;
};

MaximalData maximal_data(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Maximal subgroups of a subgroup H (using the lattice of G).
std::vector<SubgroupSet> maximal_subgroups_of(const SubgroupLattice& lattice, const SubgroupSet& h);
/// Intersection of the maximal subgroups of H; H itself if H is trivial.
SubgroupSet frattini_of(const SubgroupLattice& lattice, const SubgroupSet& h);

/// A Sylow p-subgroup. Throws PrimeNotDividing.
SubgroupSet sylow(const FiniteGroup& g, unsigned p);

std::vector<unsigned> prime_divisors(std::size_t n);

struct TwoGeneration {
  bool two_generated = false;
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Tries the construction's own generators first, then pairs (class
/// representative, element).
TwoGeneration is_two_generated(const FiniteGroup& g);

struct StructureReport {
  bool is_abelian = false;
  bool is_soluble = false;
  bool is_nilpotent = false;
  bool is_primitive = false;
  bool all_proper_quotients_cyclic = false;
  std::vector<SubgroupSet> minimal_normals;
};

bool is_soluble(const FiniteGroup& g);
StructureReport structure_report(const FiniteGroup& g, const SubgroupLattice& lattice, const MaximalData& maximal);

}  // namespace ncng

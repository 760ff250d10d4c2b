#pragma once

#include "ncng/finite_group.hpp"
#include "ncng/graphs.hpp"
#include "ncng/subgroups.hpp"

#include <map>
#include <memory>
#include <optional>

namespace ncng {

/// A group together with lazily computed structure. Not thread-safe; each
/// worker owns its own context.
class GroupContext {
 public:
  explicit GroupContext(FiniteGroup g, std::size_t lattice_cap = kDefaultLatticeCap, bool full_bfs = false);

  const FiniteGroup& group() const { return g_; }
  std::size_t lattice_cap() const { return lattice_cap_; }
  bool full_bfs() const { return full_bfs_; }
  /// False when |G| exceeds the lattice cap; graph kinds then fall back to closure.
  bool lattice_available() const { return g_.order() <= lattice_cap_; }

  const SubgroupSet& center();
  const ConjugacyClasses& classes();
  /// Throws LatticeCapExceeded.
  const SubgroupLattice& lattice();
  bool has_lattice() const;
  /// Installs a previously computed lattice (for example from a cache).
  void set_lattice(SubgroupLattice lattice);
  const MaximalData& maximal();
  const std::vector<SubgroupSet>& normals();
  const TwoGeneration& two_generation();
  const StructureReport& structure();

  const GroupGraph& graph(GraphKind kind = GraphKind::ncng);
  const ComponentSummary& summary(GraphKind kind = GraphKind::ncng);
  /// All-pairs distances in the ncng graph.
  const DistanceMatrix& distances();

  /// G/N cyclic, for N normal.
  bool quotient_is_cyclic(const SubgroupSet& n);
  /// Smallest normal subgroup containing x.
  const SubgroupSet& normal_closure_of(Elem x);
  /// Whether G/Z(G) is a (nontrivial) simple group.
  bool central_quotient_simple();
  /// Context for G/Z(G) with the projection map.
  GroupContext& central_quotient();
  const std::vector<Elem>& central_projection();

 private:
  FiniteGroup g_;
  std::size_t lattice_cap_;
  bool full_bfs_;
  std::optional<SubgroupSet> center_;
  std::optional<ConjugacyClasses> classes_;
  std::optional<SubgroupLattice> lattice_;
  std::optional<MaximalData> maximal_;
  std::optional<std::vector<SubgroupSet>> normals_;
  std::optional<TwoGeneration> two_generation_;
  std::optional<StructureReport> structure_;
  std::map<GraphKind, GroupGraph> graphs_;
  std::map<GraphKind, ComponentSummary> summaries_;
  std::optional<DistanceMatrix> distances_;
  std::vector<std::optional<SubgroupSet>> normal_closures_;
  std::optional<bool> central_quotient_simple_;
  std::unique_ptr<GroupContext> central_quotient_;
  std::vector<Elem> central_projection_;
};

}  // namespace ncng

#include "ncng/context.hpp"

#include "ncng/errors.hpp"

namespace ncng {

GroupContext::GroupContext(FiniteGroup g, std::size_t lattice_cap, bool full_bfs)
    : g_(std::move(g)), lattice_cap_(lattice_cap), full_bfs_(full_bfs) {}

const SubgroupSet& GroupContext::center() {
  if (!center_) center_ = ncng::center(g_);
  return *center_;
}

const ConjugacyClasses& GroupContext::classes() {
  if (!classes_) classes_ = conjugacy_classes(g_);
  return *classes_;
}

const SubgroupLattice& GroupContext::lattice() {
  if (!lattice_) lattice_ = all_subgroups(g_, lattice_cap_);
  return *lattice_;
}

bool GroupContext::has_lattice() const { return lattice_.has_value(); }

void GroupContext::set_lattice(SubgroupLattice lattice) {
  if (lattice_) throw Error("lattice already computed");
  for (const auto& h : lattice.subgroups()) {
    if (h.ambient_order() != g_.order()) throw Error("lattice belongs to a group of another order");
  }
  lattice_ = std::move(lattice);
}

const MaximalData& GroupContext::maximal() {
  if (!maximal_) maximal_ = maximal_data(g_, lattice());
  return *maximal_;
}

const std::vector<SubgroupSet>& GroupContext::normals() {
  if (!normals_) normals_ = normal_subgroups(g_, lattice());
  return *normals_;
}

const TwoGeneration& GroupContext::two_generation() {
  if (!two_generation_) two_generation_ = is_two_generated(g_);
  return *two_generation_;
}

const StructureReport& GroupContext::structure() {
  if (!structure_) structure_ = structure_report(g_, lattice(), maximal());
  return *structure_;
}

const GroupGraph& GroupContext::graph(GraphKind kind) {
  auto it = graphs_.find(kind);
  if (it == graphs_.end()) {
    const MaximalData* md = lattice_available() ? &maximal() : nullptr;
    it = graphs_.emplace(kind, build_graph(g_, kind, md)).first;
  }
  return it->second;
}

const ComponentSummary& GroupContext::summary(GraphKind kind) {
  auto it = summaries_.find(kind);
  if (it == summaries_.end()) {
    it = summaries_.emplace(kind, component_summary(g_, graph(kind), full_bfs_)).first;
  }
  return it->second;
}

const DistanceMatrix& GroupContext::distances() {
  if (!distances_) distances_.emplace(graph(GraphKind::ncng));
  return *distances_;
}

bool GroupContext::quotient_is_cyclic(const SubgroupSet& n) {
  if (n.is_whole()) return true;
  const auto gens = generating_set(g_, n);
  for (const auto& cls : classes().classes) {
    if (join(g_, n, gens, cls.front()).is_whole()) return true;
  }
  return false;
}

const SubgroupSet& GroupContext::normal_closure_of(Elem x) {
  if (normal_closures_.empty()) normal_closures_.resize(g_.order());
  auto& slot = normal_closures_[x];
  if (!slot) {
    const auto& cls = classes().classes[classes().class_of[x]];
    slot = closure(g_, cls);
  }
  return *slot;
}

bool GroupContext::central_quotient_simple() {
  if (!central_quotient_simple_) {
    const SubgroupSet& z = center();
    bool simple = !z.is_whole();
    for (const auto& cls : classes().classes) {
      if (!simple) break;
      if (z.contains(cls.front())) continue;
      ElementSet seed = z.members();
      for (Elem y : cls) seed.set(y);
      simple = closure(g_, seed).is_whole();
    }
    central_quotient_simple_ = simple;
  }
  return *central_quotient_simple_;
}

GroupContext& GroupContext::central_quotient() {
  if (!central_quotient_) {
    Quotient q = quotient(g_, center());
    central_projection_ = std::move(q.projection);
    central_quotient_ = std::make_unique<GroupContext>(std::move(q.group), lattice_cap_, full_bfs_);
  }
  return *central_quotient_;
}

const std::vector<Elem>& GroupContext::central_projection() {
  central_quotient();
  return central_projection_;
}

}  // namespace ncng

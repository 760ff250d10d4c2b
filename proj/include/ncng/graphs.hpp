#pragma once

#include "ncng/finite_group.hpp"
#include "ncng/subgroups.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncng {

enum class GraphKind { ncng, commuting, non_commuting, generating, non_generating };

std::string to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// How <x,y> != G was decided for the generation-based kinds.
enum class GenerationOracle { none, maximal_membership, closure };

std::string to_string(GenerationOracle oracle);

/// Graph on a subset of G. Rows are indexed by element, so BFS frontiers are
/// plain element sets; rows of non-vertices are empty.
struct GroupGraph {
  GraphKind kind = GraphKind::ncng;
  GenerationOracle oracle = GenerationOracle::none;
  ElementSet vertices;
  std::vector<ElementSet> adjacency;
  /// True when x -> x^g maps the graph onto itself for every g.
  bool conjugation_invariant = true;

  std::size_t vertex_count() const { return vertices.count(); }
  bool is_vertex(Elem x) const { return x < vertices.size() && vertices.test(x); }
  bool adjacent(Elem x, Elem y) const { return adjacency[x].test(y); }
  std::size_t degree(Elem x) const { return adjacency[x].count(); }
  std::size_t edge_count() const;
  std::vector<Elem> vertex_list() const { return to_vector(vertices); }
};

/// For each element x, the union of the maximal subgroups containing x.
/// <x,y> != G iff y lies in row x.
std::vector<ElementSet> non_generating_rows(const FiniteGroup& g, const MaximalData& maximal);

/// Graph of the given kind on G \ Z(G). Generation is decided through
/// `maximal` when given, else by closing each pair.
GroupGraph build_graph(const FiniteGroup& g, GraphKind kind, const MaximalData* maximal = nullptr);

/// Subgraph induced on `keep`, which need not be conjugation-invariant.
GroupGraph induced_subgraph(const GroupGraph& graph, const ElementSet& keep, bool conjugation_invariant = false);
/// Subgraph induced on the non-isolated vertices.
GroupGraph nd_subgraph(const GroupGraph& graph);

struct ComponentSummary {
  std::vector<ElementSet> components;  // ordered by smallest member
  std::vector<std::size_t> diameters;  // 0 for singletons
  std::size_t isolated_count = 0;
  ElementSet nd_vertices;

  std::size_t component_count() const { return components.size(); }
  std::size_t nontrivial_count() const;
  /// Diameter of the whole graph; nullopt when disconnected or empty.
  std::optional<std::size_t> diameter() const;
  /// Diameter of the non-isolated part; nullopt when it is disconnected,
  /// 0 when there are no edges.
  std::optional<std::size_t> nd_diameter() const;
};

/// Components and exact diameters. Eccentricities come from one BFS per
/// conjugacy class when the graph is conjugation-invariant, unless `full_bfs`.
ComponentSummary component_summary(const FiniteGroup& g, const GroupGraph& graph, bool full_bfs = false);

/// BFS distance; nullopt means infinite. Throws NotAVertex.
std::optional<std::size_t> distance(const GroupGraph& graph, Elem x, Elem y);

/// All-pairs distances indexed by element, kUnreachable between components.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;
  DistanceMatrix() = default;
  explicit DistanceMatrix(const GroupGraph& graph);

  std::uint16_t operator()(Elem x, Elem y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> d_;
};

/// Distances from `source` to every element (kUnreachable for non-vertices).
std::vector<std::uint16_t> bfs_distances(const GroupGraph& graph, Elem source);

/// Graphviz output; vertices carry element labels and a per-component colour.
void write_dot(std::ostream& out, const FiniteGroup& g, const GroupGraph& graph, const ComponentSummary& summary);

/// 8-byte little-endian vertex count, then one row per vertex (in index
/// order) of ceil(V/8) bytes, least significant bit first.
void write_adjacency(std::ostream& out, const GroupGraph& graph);

}  // namespace ncng

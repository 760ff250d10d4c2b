#include "ncng/graphs.hpp"

#include "ncng/errors.hpp"

#include <algorithm>
#include <array>
#include <ostream>

namespace ncng {

namespace {

constexpr std::array<std::pair<GraphKind, std::string_view>, 5> kKindNames{{
    {GraphKind::ncng, "ncng"},
    {GraphKind::commuting, "commuting"},
    {GraphKind::non_commuting, "non_commuting"},
    {GraphKind::generating, "generating"},
    {GraphKind::non_generating, "non_generating"},
}};

std::vector<ElementSet> closure_rows(const FiniteGroup& g, const ElementSet& vertices) {
  const std::size_t n = g.order();
  std::vector<ElementSet> rows(n, ElementSet(n));
  const auto verts = to_vector(vertices);
  const bool abelian = g.is_abelian();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Elem x = verts[i], y = verts[j];
      // Commuting pairs generate an abelian subgroup, hence not G.
      bool proper = !abelian && g.commute(x, y);
      if (!proper) {
        const Elem pair[] = {x, y};
        proper = !closure(g, pair).is_whole();
      }
      if (proper) {
        rows[x].set(y);
        rows[y].set(x);
      }
    }
  }
  return rows;
}

std::size_t eccentricity(const GroupGraph& graph, Elem source) {
  ElementSet visited(graph.vertices.size());
  visited.set(source);
  ElementSet frontier = visited;
  std::size_t level = 0;
  ElementSet next(graph.vertices.size());
  while (true) {
    next.reset();
    for_each_member(frontier, [&](Elem v) { next |= graph.adjacency[v]; });
    next -= visited;
    if (next.none()) return level;
    visited |= next;
    frontier.swap(next);
    ++level;
  }
}

}  // namespace

std::string to_string(GraphKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return std::string(name);
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string to_string(GenerationOracle oracle) {
  switch (oracle) {
    case GenerationOracle::none: return "none";
    case GenerationOracle::maximal_membership: return "maximal_membership";
    case GenerationOracle::closure: return "closure";
  }
  return "unknown";
}

std::size_t GroupGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

std::vector<ElementSet> non_generating_rows(const FiniteGroup& g, const MaximalData& maximal) {
  std::vector<ElementSet> rows(g.order(), ElementSet(g.order()));
  for (const auto& m : maximal.maximals) {
    for_each_member(m.members(), [&](Elem x) { rows[x] |= m.members(); });
  }
  return rows;
}

GroupGraph build_graph(const FiniteGroup& g, GraphKind kind, const MaximalData* maximal) {
  const std::size_t n = g.order();
  GroupGraph out;
  out.kind = kind;
  out.vertices = g.full_set() - center(g).members();
  out.adjacency.assign(n, ElementSet(n));

  std::vector<ElementSet> generation;
  if (kind != GraphKind::commuting && kind != GraphKind::non_commuting) {
    if (maximal) {
      generation = non_generating_rows(g, *maximal);
      out.oracle = GenerationOracle::maximal_membership;
    } else {
      generation = closure_rows(g, out.vertices);
      out.oracle = GenerationOracle::closure;
    }
  }

  ElementSet commuting(n);
  for_each_member(out.vertices, [&](Elem x) {
    commuting.reset();
    for (Elem y = 0; y < n; ++y) {
      if (g.commute(x, y)) commuting.set(y);
    }
    ElementSet& row = out.adjacency[x];
    switch (kind) {
      case GraphKind::commuting: row = commuting; break;
      case GraphKind::non_commuting: row = ~commuting; break;
      case GraphKind::non_generating: row = generation[x]; break;
      case GraphKind::generating: row = ~generation[x]; break;
      case GraphKind::ncng: row = generation[x] - commuting; break;
    }
    row &= out.vertices;
    row.reset(x);
  });
  return out;
}

GroupGraph induced_subgraph(const GroupGraph& graph, const ElementSet& keep, bool conjugation_invariant) {
  GroupGraph out;
  out.kind = graph.kind;
  out.oracle = graph.oracle;
  out.vertices = graph.vertices & keep;
  out.conjugation_invariant = graph.conjugation_invariant && conjugation_invariant;
  out.adjacency.assign(graph.adjacency.size(), ElementSet(graph.vertices.size()));
  for_each_member(out.vertices, [&](Elem x) { out.adjacency[x] = graph.adjacency[x] & out.vertices; });
  return out;
}

GroupGraph nd_subgraph(const GroupGraph& graph) {
  ElementSet keep(graph.vertices.size());
  for_each_member(graph.vertices, [&](Elem x) {
    if (graph.adjacency[x].any()) keep.set(x);
  });
  return induced_subgraph(graph, keep, true);
}

std::size_t ComponentSummary::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const ElementSet& c) { return c.count() > 1; }));
}

std::optional<std::size_t> ComponentSummary::diameter() const {
  if (components.size() != 1) return std::nullopt;
  return diameters.front();
}

std::optional<std::size_t> ComponentSummary::nd_diameter() const {
  std::optional<std::size_t> out = 0;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].count() < 2) continue;
    if (++seen > 1) return std::nullopt;
    out = diameters[i];
  }
  return out;
}

ComponentSummary component_summary(const FiniteGroup& g, const GroupGraph& graph, bool full_bfs) {
  ComponentSummary out;
  const std::size_t n = graph.vertices.size();
  out.nd_vertices = ElementSet(n);

  ElementSet remaining = graph.vertices;
  ElementSet next(n);
  while (remaining.any()) {
    ElementSet comp(n);
    ElementSet frontier(n);
    frontier.set(remaining.find_first());
    comp |= frontier;
    while (frontier.any()) {
      next.reset();
      for_each_member(frontier, [&](Elem v) { next |= graph.adjacency[v]; });
      next -= comp;
      comp |= next;
      frontier.swap(next);
    }
    remaining -= comp;
    out.components.push_back(std::move(comp));
  }

  std::vector<std::size_t> ecc(n, 0);
  if (graph.conjugation_invariant && !full_bfs) {
    // Conjugation is a graph automorphism, so eccentricity is a class function.
    const auto classes = conjugacy_classes(g);
    for (const auto& cls : classes.classes) {
      if (!graph.is_vertex(cls.front())) continue;
      const std::size_t e = eccentricity(graph, cls.front());
      for (Elem x : cls) ecc[x] = e;
    }
  } else {
    for_each_member(graph.vertices, [&](Elem x) { ecc[x] = eccentricity(graph, x); });
  }

  for (const auto& comp : out.components) {
    std::size_t d = 0;
    for_each_member(comp, [&](Elem x) { d = std::max(d, ecc[x]); });
    out.diameters.push_back(d);
  }
  for_each_member(graph.vertices, [&](Elem x) {
    if (graph.adjacency[x].any()) {
      out.nd_vertices.set(x);
    } else {
      ++out.isolated_count;
    }
  });
  return out;
}

std::vector<std::uint16_t> bfs_distances(const GroupGraph& graph, Elem source) {
  const std::size_t n = graph.vertices.size();
  std::vector<std::uint16_t> dist(n, DistanceMatrix::kUnreachable);
  ElementSet visited(n);
  visited.set(source);
  ElementSet frontier = visited;
  ElementSet next(n);
  std::uint16_t level = 0;
  dist[source] = 0;
  while (frontier.any()) {
    next.reset();
    for_each_member(frontier, [&](Elem v) { next |= graph.adjacency[v]; });
    next -= visited;
    ++level;
    for_each_member(next, [&](Elem v) { dist[v] = level; });
    visited |= next;
    frontier.swap(next);
  }
  return dist;
}

std::optional<std::size_t> distance(const GroupGraph& graph, Elem x, Elem y) {
  if (!graph.is_vertex(x)) throw NotAVertex("element " + std::to_string(x) + " is not a vertex");
  if (!graph.is_vertex(y)) throw NotAVertex("element " + std::to_string(y) + " is not a vertex");
  const auto d = bfs_distances(graph, x)[y];
  if (d == DistanceMatrix::kUnreachable) return std::nullopt;
  return d;
}

DistanceMatrix::DistanceMatrix(const GroupGraph& graph)
    : n_(graph.vertices.size()), d_(n_ * n_, kUnreachable) {
  for_each_member(graph.vertices, [&](Elem x) {
    const auto row = bfs_distances(graph, x);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(x * n_));
  });
}

void write_dot(std::ostream& out, const FiniteGroup& g, const GroupGraph& graph, const ComponentSummary& summary) {
  static constexpr std::array<const char*, 9> palette{"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                                      "#a65628", "#f781bf", "#999999", "#dede00"};
  auto escape = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  out << "graph \"" << to_string(graph.kind) << "\" {\n";
  out << "  node [style=filled, fontsize=10];\n";
  for (std::size_t c = 0; c < summary.components.size(); ++c) {
    for_each_member(summary.components[c], [&](Elem x) {
      out << "  v" << x << " [label=\"" << escape(g.label(x)) << "\", fillcolor=\"" << palette[c % palette.size()]
          << "\", component=" << c << "];\n";
    });
  }
  for_each_member(graph.vertices, [&](Elem x) {
    for_each_member(graph.adjacency[x], [&](Elem y) {
      if (x < y) out << "  v" << x << " -- v" << y << ";\n";
    });
  });
  out << "}\n";
}

void write_adjacency(std::ostream& out, const GroupGraph& graph) {
  const auto verts = graph.vertex_list();
  const std::uint64_t v = verts.size();
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
  const std::size_t row_bytes = (verts.size() + 7) / 8;
  std::vector<unsigned char> row(row_bytes);
  for (Elem x : verts) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (graph.adjacent(x, verts[j])) row[j / 8] |= static_cast<unsigned char>(1u << (j % 8));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row_bytes));
  }
}

}  // namespace ncng

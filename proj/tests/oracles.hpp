#pragma once

// Brute-force reference computations. They use nothing from the engine but
// the Cayley table, so agreement with the engine is independent evidence.

#include "ncng/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using ncng::Elem;
using ncng::FiniteGroup;
using Members = std::vector<bool>;

inline Members generated(const FiniteGroup& g, const std::vector<Elem>& seed) {
  Members in(g.order(), false);
  std::deque<Elem> todo{g.identity()};
  in[g.identity()] = true;
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop_front();
    for (Elem s : seed) {
      const Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        todo.push_back(y);
      }
    }
  }
  return in;
}

inline std::size_t count(const Members& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

inline std::vector<Elem> elements(const Members& m) {
  std::vector<Elem> out;
  for (Elem i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back(i);
  }
  return out;
}

inline bool commute(const FiniteGroup& g, Elem a, Elem b) { return g.mul(a, b) == g.mul(b, a); }

inline Members center(const FiniteGroup& g) {
  Members z(g.order(), true);
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order() && z[a]; ++b) z[a] = commute(g, a, b);
  }
  return z;
}

inline std::size_t element_order(const FiniteGroup& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// Element-order histogram: order -> number of elements.
inline std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Elem x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

inline bool generates(const FiniteGroup& g, Elem x, Elem y) { return count(generated(g, {x, y})) == g.order(); }

/// Adjacency of the non-commuting, non-generating graph on G \ Z(G).
struct Graph {
  std::vector<Elem> vertices;
  std::vector<std::vector<std::size_t>> adj;  // indices into vertices
};

inline Graph ncng_graph(const FiniteGroup& g) {
  Graph out;
  const Members z = oracle::center(g);
  for (Elem x = 0; x < g.order(); ++x) {
    if (!z[x]) out.vertices.push_back(x);
  }
  out.adj.resize(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      const Elem x = out.vertices[i], y = out.vertices[j];
      if (!commute(g, x, y) && !generates(g, x, y)) {
        out.adj[i].push_back(j);
        out.adj[j].push_back(i);
      }
    }
  }
  return out;
}

inline std::vector<int> bfs(const Graph& gr, std::size_t source) {
  std::vector<int> d(gr.vertices.size(), -1);
  std::deque<std::size_t> q{source};
  d[source] = 0;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop_front();
    for (auto w : gr.adj[v]) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
    }
  }
  return d;
}

struct Summary {
  std::size_t components = 0;
  std::size_t isolated = 0;
  std::multiset<std::size_t> nontrivial_diameters;
  std::optional<std::size_t> diameter;     // whole graph, when connected and nonempty
  std::optional<std::size_t> nd_diameter;  // non-isolated part, 0 without edges
};

inline Summary summarize(const Graph& gr) {
  Summary s;
  const std::size_t n = gr.vertices.size();
  std::vector<int> comp(n, -1);
  std::vector<std::size_t> ecc(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = bfs(gr, v);
    for (std::size_t w = 0; w < n; ++w) {
      if (d[w] > 0) ecc[v] = std::max<std::size_t>(ecc[v], d[w]);
    }
    if (comp[v] < 0) {
      for (std::size_t w = 0; w < n; ++w) {
        if (d[w] >= 0) comp[w] = static_cast<int>(s.components);
      }
      ++s.components;
    }
  }
  std::vector<std::size_t> size(s.components, 0), diam(s.components, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++size[comp[v]];
    diam[comp[v]] = std::max(diam[comp[v]], ecc[v]);
  }
  std::size_t nontrivial = 0;
  for (std::size_t c = 0; c < s.components; ++c) {
    if (size[c] == 1) {
      ++s.isolated;
    } else {
      ++nontrivial;
      s.nontrivial_diameters.insert(diam[c]);
    }
  }
  if (s.components == 1) s.diameter = diam[0];
  if (nontrivial == 0) {
    s.nd_diameter = 0;
  } else if (nontrivial == 1) {
    s.nd_diameter = *s.nontrivial_diameters.begin();
  }
  return s;
}

/// Every subgroup, found by adjoining one element at a time from the trivial group.
inline std::set<Members> all_subgroups(const FiniteGroup& g) {
  std::set<Members> found;
  std::vector<Members> frontier{generated(g, {})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Members> next;
    for (const auto& h : frontier) {
      auto gens = elements(h);
      for (Elem x = 0; x < g.order(); ++x) {
        if (h[x]) continue;
        gens.push_back(x);
        Members k = generated(g, gens);
        gens.pop_back();
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return found;
}

inline bool subset(const Members& a, const Members& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline std::vector<Members> maximal_subgroups(const FiniteGroup& g, const std::set<Members>& subs) {
  std::vector<Members> out;
  for (const auto& h : subs) {
    if (count(h) == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs) {
      if (k != h && count(k) < g.order() && subset(h, k)) maximal = false;
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

inline bool is_normal(const FiniteGroup& g, const Members& h) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (!h[x]) continue;
    for (Elem a = 0; a < g.order(); ++a) {
      if (!h[g.mul(g.mul(g.inv(a), x), a)]) return false;
    }
  }
  return true;
}

inline Members intersection(const std::vector<Members>& sets, std::size_t n) {
  Members out(n, true);
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] && s[i];
  }
  return out;
}

}  // namespace oracle

#pragma once

// Brute-force reference implementations used as test oracles.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gso/graph.hpp"
#include "gso/search.hpp"

namespace oracle {

inline gso::Graph triangle_with_pendant() {
  return gso::Graph::from_pairs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

inline gso::Graph diamond() {
  return gso::Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
}

inline gso::Graph random_connected(std::mt19937_64& rng, int n, int density) {
  std::vector<gso::Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(gso::make_edge(v, static_cast<int>(rng() % v)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < density) edges.push_back(gso::make_edge(u, v));
  return gso::Graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline gso::VertexSet vs(std::initializer_list<int> xs) {
  gso::VertexSet s;
  for (int x : xs) s.set(x);
  return s;
}

// Adjacency bit string under a vertex order.
inline std::string adjacency_key(const gso::Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::string key;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) key.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
  return key;
}

// Lexicographically smallest adjacency key over all vertex orders.
inline std::string brute_canonical(const gso::Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string key = adjacency_key(g, order);
    if (first || key < best) best = std::move(key);
    first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::to_string(g.vertex_count()) + ":" + best;
}

inline bool brute_isomorphic(const gso::Graph& a, const gso::Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         brute_canonical(a) == brute_canonical(b);
}

// Every labelled graph on n vertices, by edge mask over the pairs i<j.
inline std::vector<gso::Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<gso::Graph> out;
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    std::vector<gso::Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) edges.push_back(gso::make_edge(pairs[b].first, pairs[b].second));
    out.emplace_back(n, edges);
  }
  return out;
}

// Outerplanar iff the vertices can be placed on a circle with no two edges crossing.
inline bool circle_embeddable(const gso::Graph& g) {
  const int n = g.vertex_count();
  if (n <= 3) return true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    bool ok = true;
    const auto& es = g.edges();
    for (std::size_t x = 0; x < es.size() && ok; ++x) {
      int a = pos[es[x].u], b = pos[es[x].v];
      if (a > b) std::swap(a, b);
      for (std::size_t y = x + 1; y < es.size() && ok; ++y) {
        int c = pos[es[y].u], d = pos[es[y].v];
        if (c > d) std::swap(c, d);
        const bool c_in = a < c && c < b;
        const bool d_in = a < d && d < b;
        const bool shared = c == a || c == b || d == a || d == b;
        if (!shared && c_in != d_in) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

// Recontamination by repeated local removal until nothing changes.
inline gso::EdgeSet fixpoint_closure(const gso::Graph& g, const gso::EdgeSet& q,
                                     const gso::VertexSet& guarded) {
  gso::EdgeSet clean = q;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e : clean.members()) {
      const gso::Edge ed = g.edge(e);
      for (int end : {ed.u, ed.v}) {
        if (guarded.test(end)) continue;
        bool dirty_neighbour = false;
        g.incident_edges(end).for_each([&](int f) {
          if (!clean.contains(f)) dirty_neighbour = true;
        });
        if (dirty_neighbour) {
          clean.erase(e);
          changed = true;
          break;
        }
      }
    }
  }
  return clean;
}

}  // namespace oracle

#pragma once

#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"

namespace gso {

int root_vertex(const RootedGraph& rg);

namespace detail {

// Disjoint union of the members with their roots identified; the shared vertex is 0.
inline Graph identify_roots(const std::vector<const RootedGraph*>& members) {
  int n = 1;
  for (const RootedGraph* m : members) n += m->graph.vertex_count() - 1;
  std::vector<Edge> edges;
  int next = 1;
  for (const RootedGraph* m : members) {
    const int r = root_vertex(*m);
    std::vector<int> id(m->graph.vertex_count());
    for (int v = 0; v < m->graph.vertex_count(); ++v) id[v] = v == r ? 0 : next++;
    for (const Edge& e : m->graph.edges()) edges.push_back(make_edge(id[e.u], id[e.v]));
  }
  return Graph(n, edges);
}

// Calls f on every nondecreasing index sequence of length m over [0, size).
template <class F>
void for_each_multiset(int size, int m, F&& f) {
  if (m <= 0 || size <= 0) return;
  std::vector<int> pick(m, 0);
  while (true) {
    f(pick);
    int i = m - 1;
    while (i >= 0 && pick[i] == size - 1) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
  }
}

}  // namespace detail

}  // namespace gso

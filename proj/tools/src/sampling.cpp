#include "gso_cli/sampling.hpp"

#include <algorithm>
#include <utility>

namespace gso::cli {

std::vector<int> Sampler::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(0, i)]);
  return p;
}

Graph Sampler::connected_graph(int n, int density) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(v, uniform(0, v - 1)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform(1, 100) <= density) edges.push_back(make_edge(u, v));
  return relabel(Graph(n, edges), permutation(n));
}

VertexSet Sampler::connected_subset(const Graph& g, bool allow_empty) {
  const int n = g.vertex_count();
  if (n == 0 || (allow_empty && coin(1, 3))) return {};
  VertexSet s = VertexSet::single(uniform(0, n - 1));
  const int target = uniform(1, n);
  while (s.count() < target) {
    VertexSet frontier;
    s.for_each([&](int v) { frontier |= g.neighbours(v); });
    frontier.remove(s);
    if (frontier.none()) break;
    const std::vector<int> options = frontier.members();
    s.set(options[uniform(0, static_cast<int>(options.size()) - 1)]);
  }
  return s;
}

VertexSet Sampler::subset(const VertexSet& of) {
  VertexSet s;
  of.for_each([&](int v) {
    if (coin()) s.set(v);
  });
  return s;
}

RootedGraph Sampler::rooted(const Graph& g) {
  const VertexSet in = connected_subset(g);
  VertexSet out;
  if (!coin(1, 3)) {
    const int k = uniform(1, std::min(3, g.vertex_count()));
    for (int v : permutation(g.vertex_count())) {
      if (out.count() == k) break;
      out.set(v);
    }
  }
  return RootedGraph(g, in, out);
}

RootedGraph Sampler::contract_random_edge(const RootedGraph& rg) {
  const Graph& g = rg.graph;
  return contract_edge_rooted(rg, g.edge(uniform(0, g.edge_count() - 1)));
}

}  // namespace gso::cli

#pragma once

#include <vector>

#include "gso/graph.hpp"

namespace gso {

// A connected graph with an in-root set and an out-root set (which may overlap).
struct RootedGraph {
  Graph graph;
  VertexSet s_in;
  VertexSet s_out;

  RootedGraph() = default;
  // Throws GraphError if the graph is disconnected or a root is out of range.
  explicit RootedGraph(Graph g, VertexSet in = {}, VertexSet out = {});
  // Double rooting on a single vertex.
  static RootedGraph at(Graph g, int v);

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

RootedGraph rev(const RootedGraph& rg);
// Merged vertex is an in-root (out-root) iff either endpoint was.
RootedGraph contract_edge_rooted(const RootedGraph& rg, Edge e);

// The graph with two apex vertices added: u_in joined to S_in and u_out joined to S_out.
// Base vertices keep their ids; u_in = n, u_out = n + 1.
struct Enhancement {
  Graph host;
  int base_vertex_count = 0;
  int u_in = 0;
  int u_out = 0;
  EdgeSet e_in;
  EdgeSet e_out;
  std::vector<int> host_edge_of_base;  // base edge id -> host edge id
  std::vector<int> base_edge_of_host;  // host edge id -> base edge id, -1 for apex edges

  VertexSet s_in() const;
  VertexSet s_out() const;
  // E(host) minus E_out: the final set of every expansion.
  EdgeSet goal() const { return host.all_edges() - e_out; }
  // E_in together with the base edges inside S_in.
  EdgeSet start_region() const;
};

Enhancement enhance(const RootedGraph& rg);
Enhancement enhance(const Graph& g, const VertexSet& s_in, const VertexSet& s_out);

// A rooted graph whose vertices carry names in a shared namespace, as needed for glue.
struct GluePart {
  RootedGraph rooted;
  std::vector<int> names;  // names[v] for every vertex v of rooted.graph, pairwise distinct

  // Names are the identity 0..n-1.
  static GluePart identity(RootedGraph rg);
  // Names of the given local vertices.
  VertexSet named_set(const VertexSet& local) const;
};

// Union of the parts; in-roots of the first and out-roots of the last.
// Consecutive parts must meet exactly in out-roots(i) = in-roots(i+1); throws GraphError
// "glue precondition" otherwise. Result vertices are the sorted union of the names.
GluePart glue(const std::vector<GluePart>& parts);

// Subgraph of g formed by the edges in f (with their endpoints), named by g's vertex ids.
GluePart named_edge_subgraph(const Graph& g, const EdgeSet& f, const VertexSet& s_in,
                             const VertexSet& s_out);
// Induced subgraph of g on keep, named by g's vertex ids.
GluePart named_induced_subgraph(const Graph& g, const VertexSet& keep, const VertexSet& s_in,
                                const VertexSet& s_out);

}  // namespace gso

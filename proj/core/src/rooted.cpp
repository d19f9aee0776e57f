#include "gso/rooted.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gso {

RootedGraph::RootedGraph(Graph g, VertexSet in, VertexSet out)
    : graph(std::move(g)), s_in(in), s_out(out) {
  VertexSet all = graph.vertices();
  if (!s_in.subset_of(all) || !s_out.subset_of(all)) throw GraphError("root outside the graph");
  if (!is_connected(graph)) throw GraphError("rooted graph must be connected");
}

RootedGraph RootedGraph::at(Graph g, int v) {
  VertexSet r = VertexSet::single(v);
  return RootedGraph(std::move(g), r, r);
}

RootedGraph rev(const RootedGraph& rg) {
  RootedGraph out = rg;
  std::swap(out.s_in, out.s_out);
  return out;
}

RootedGraph contract_edge_rooted(const RootedGraph& rg, Edge e) {
  e = make_edge(e.u, e.v);
  Graph h = contract_edge(rg.graph, e);
  auto map = contraction_map(rg.graph.vertex_count(), e);
  VertexSet in, out;
  rg.s_in.for_each([&](int v) { in.set(map[v]); });
  rg.s_out.for_each([&](int v) { out.set(map[v]); });
  return RootedGraph(std::move(h), in, out);
}

VertexSet Enhancement::s_in() const {
  VertexSet s;
  host.neighbours(u_in).for_each([&](int v) { s.set(v); });
  return s;
}

VertexSet Enhancement::s_out() const {
  VertexSet s;
  host.neighbours(u_out).for_each([&](int v) { s.set(v); });
  return s;
}

EdgeSet Enhancement::start_region() const {
  EdgeSet r = e_in;
  VertexSet in = s_in();
  for (int e = 0; e < host.edge_count(); ++e) {
    const Edge& ed = host.edge(e);
    if (in.test(ed.u) && in.test(ed.v)) r.insert(e);
  }
  return r;
}

Enhancement enhance(const Graph& g, const VertexSet& s_in, const VertexSet& s_out) {
  int n = g.vertex_count();
  if (n + 2 > kMaxVertices) throw GraphError("graph too large to enhance");
  if (!s_in.subset_of(g.vertices()) || !s_out.subset_of(g.vertices()))
    throw GraphError("root outside the graph");
  std::vector<Edge> edges = g.edges();
  s_in.for_each([&](int v) { edges.push_back({v, n}); });
  s_out.for_each([&](int v) { edges.push_back({v, n + 1}); });
  Enhancement h;
  h.host = Graph(n + 2, edges);
  h.base_vertex_count = n;
  h.u_in = n;
  h.u_out = n + 1;
  h.e_in = EdgeSet(h.host.edge_count());
  h.e_out = EdgeSet(h.host.edge_count());
  h.host_edge_of_base.resize(g.edge_count());
  h.base_edge_of_host.assign(h.host.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    int he = h.host.edge_index(g.edge(e));
    h.host_edge_of_base[e] = he;
    h.base_edge_of_host[he] = e;
  }
  s_in.for_each([&](int v) { h.e_in.insert(h.host.edge_index(v, n)); });
  s_out.for_each([&](int v) { h.e_out.insert(h.host.edge_index(v, n + 1)); });
  return h;
}

Enhancement enhance(const RootedGraph& rg) { return enhance(rg.graph, rg.s_in, rg.s_out); }

// ---------------------------------------------------------------- glue

GluePart GluePart::identity(RootedGraph rg) {
  GluePart p;
  p.names.resize(rg.graph.vertex_count());
  for (int v = 0; v < rg.graph.vertex_count(); ++v) p.names[v] = v;
  p.rooted = std::move(rg);
  return p;
}

namespace {

std::set<int> names_of(const GluePart& p, const VertexSet& local) {
  std::set<int> out;
  local.for_each([&](int v) { out.insert(p.names[v]); });
  return out;
}

}  // namespace

GluePart glue(const std::vector<GluePart>& parts) {
  if (parts.empty()) throw GraphError("glue precondition: no parts");
  for (const auto& p : parts) {
    if (static_cast<int>(p.names.size()) != p.rooted.graph.vertex_count())
      throw GraphError("glue precondition: part names do not cover its vertices");
    std::set<int> uniq(p.names.begin(), p.names.end());
    if (uniq.size() != p.names.size()) throw GraphError("glue precondition: repeated vertex name");
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::set<int> a(parts[i].names.begin(), parts[i].names.end());
    std::set<int> shared;
    for (int x : parts[i + 1].names)
      if (a.count(x)) shared.insert(x);
    if (shared != names_of(parts[i], parts[i].rooted.s_out) ||
        shared != names_of(parts[i + 1], parts[i + 1].rooted.s_in))
      throw GraphError("glue precondition: parts " + std::to_string(i) + " and " +
                       std::to_string(i + 1) + " must meet exactly in their shared roots");
  }
  std::set<int> all;
  for (const auto& p : parts) all.insert(p.names.begin(), p.names.end());
  std::map<int, int> local;
  GluePart out;
  for (int x : all) {
    local[x] = static_cast<int>(out.names.size());
    out.names.push_back(x);
  }
  std::vector<Edge> edges;
  for (const auto& p : parts)
    for (const Edge& e : p.rooted.graph.edges())
      edges.push_back(make_edge(local[p.names[e.u]], local[p.names[e.v]]));
  VertexSet in, out_roots;
  parts.front().rooted.s_in.for_each([&](int v) { in.set(local[parts.front().names[v]]); });
  parts.back().rooted.s_out.for_each([&](int v) { out_roots.set(local[parts.back().names[v]]); });
  out.rooted = RootedGraph(Graph(static_cast<int>(out.names.size()), edges), in, out_roots);
  return out;
}

VertexSet GluePart::named_set(const VertexSet& local) const {
  VertexSet s;
  local.for_each([&](int v) { s.set(names[v]); });
  return s;
}

GluePart named_induced_subgraph(const Graph& g, const VertexSet& keep, const VertexSet& s_in,
                                const VertexSet& s_out) {
  std::vector<int> old;
  Graph h = induced_subgraph(g, keep, &old);
  VertexSet in, out;
  for (int i = 0; i < static_cast<int>(old.size()); ++i) {
    if (s_in.test(old[i])) in.set(i);
    if (s_out.test(old[i])) out.set(i);
  }
  GluePart p;
  p.rooted = RootedGraph(std::move(h), in, out);
  p.names = std::move(old);
  return p;
}

GluePart named_edge_subgraph(const Graph& g, const EdgeSet& f, const VertexSet& s_in,
                             const VertexSet& s_out) {
  VertexSet keep = covered_vertices(g, f) | s_in | s_out;
  std::vector<int> map(g.vertex_count(), -1);
  GluePart p;
  keep.for_each([&](int v) {
    map[v] = static_cast<int>(p.names.size());
    p.names.push_back(v);
  });
  std::vector<Edge> edges;
  f.for_each([&](int e) { edges.push_back({map[g.edge(e).u], map[g.edge(e).v]}); });
  VertexSet in, out;
  s_in.for_each([&](int v) { in.set(map[v]); });
  s_out.for_each([&](int v) { out.set(map[v]); });
  p.rooted = RootedGraph(Graph(static_cast<int>(p.names.size()), edges), in, out);
  return p;
}

}  // namespace gso

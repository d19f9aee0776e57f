#include "gso/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gso {

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw GraphError("negative edge universe");
}

EdgeSet EdgeSet::full(int universe) {
  EdgeSet s(universe);
  for (int e = 0; e < universe; ++e) s.insert(e);
  return s;
}

EdgeSet EdgeSet::of(int universe, std::initializer_list<int> members) {
  EdgeSet s(universe);
  for (int e : members) s.insert(e);
  return s;
}

void EdgeSet::check_index(int e) const {
  if (e < 0 || e >= universe_) throw GraphError("edge id " + std::to_string(e) + " outside host");
}

void EdgeSet::check_universe(const EdgeSet& o) const {
  if (o.universe_ != universe_) throw GraphError("edge sets over different hosts");
}

void EdgeSet::insert(int e) {
  check_index(e);
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void EdgeSet::erase(int e) {
  check_index(e);
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

bool EdgeSet::contains(int e) const {
  if (e < 0 || e >= universe_) return false;
  return (words_[e >> 6] >> (e & 63)) & 1u;
}

int EdgeSet::size() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool EdgeSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<int> EdgeSet::members() const {
  std::vector<int> out;
  for_each([&](int e) { out.push_back(e); });
  return out;
}

bool EdgeSet::subset_of(const EdgeSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool EdgeSet::intersects(const EdgeSet& o) const {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  adj_.assign(n, VertexSet{});
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
      throw GraphError("edge endpoint out of range");
    if (raw.u == raw.v) throw GraphError("loops are not allowed");
    Edge e = make_edge(raw.u, raw.v);
    if (adj_[e.u].test(e.v)) continue;
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < edge_count(); ++i) {
    edge_id_[edges_[i].u * n + edges_[i].v] = i;
    edge_id_[edges_[i].v * n + edges_[i].u] = i;
  }
}

Graph Graph::from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, edges);
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return edge_id_[u * n_ + v];
}

EdgeSet Graph::incident_edges(int v) const {
  EdgeSet s(edge_count());
  adj_[v].for_each([&](int u) { s.insert(edge_index(v, u)); });
  return s;
}

// ---------------------------------------------------------------- helpers

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_connected(const Graph& g, const VertexSet& subset) {
  int start = subset.first();
  if (start < 0) return true;
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbours(v); });
    next &= subset;
    next.remove(seen);
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

bool edges_connected(const Graph& g, const EdgeSet& f) {
  if (f.empty()) return true;
  VertexSet cover = covered_vertices(g, f);
  // BFS over vertices using only edges of f.
  int start = cover.first();
  VertexSet seen = VertexSet::single(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbours(v).for_each([&](int u) {
      if (!seen.test(u) && f.contains(g.edge_index(v, u))) {
        seen.set(u);
        stack.push_back(u);
      }
    });
  }
  return seen == cover;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left.any()) {
    int s = left.first();
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbours(v); });
      next &= within;
      next.remove(comp);
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left.remove(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

VertexSet covered_vertices(const Graph& g, const EdgeSet& f) {
  VertexSet s;
  f.for_each([&](int e) {
    s.set(g.edge(e).u);
    s.set(g.edge(e).v);
  });
  return s;
}

VertexSet boundary(const Graph& g, const EdgeSet& f) {
  if (f.universe() != g.edge_count()) throw GraphError("edge set does not belong to graph");
  VertexSet in, out;
  for (int e = 0; e < g.edge_count(); ++e) {
    VertexSet& side = f.contains(e) ? in : out;
    side.set(g.edge(e).u);
    side.set(g.edge(e).v);
  }
  return in & out;
}

Graph relabel(const Graph& g, const std::vector<int>& new_id) {
  if (static_cast<int>(new_id.size()) != g.vertex_count()) throw GraphError("relabel size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(make_edge(new_id[e.u], new_id[e.v]));
  return Graph(g.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* old_ids) {
  std::vector<int> map(g.vertex_count(), -1);
  std::vector<int> back;
  keep.for_each([&](int v) {
    if (v < g.vertex_count()) {
      map[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  });
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0) edges.push_back({map[e.u], map[e.v]});
  if (old_ids) *old_ids = back;
  return Graph(static_cast<int>(back.size()), edges);
}

Graph edge_subgraph(const Graph& g, const EdgeSet& f) {
  std::vector<Edge> edges;
  f.for_each([&](int e) { edges.push_back(g.edge(e)); });
  return Graph(g.vertex_count(), edges);
}

std::vector<int> contraction_map(int n, Edge e) {
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = x < e.v ? x : (x == e.v ? e.u : x - 1);
  return map;
}

Graph contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (g.edge_index(e) < 0) throw GraphError("no such edge");
  auto map = contraction_map(g.vertex_count(), e);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    int a = map[f.u], b = map[f.v];
    if (a != b) edges.push_back(make_edge(a, b));
  }
  return Graph(g.vertex_count() - 1, edges);
}

Graph delete_edge(const Graph& g, Edge e) {
  int id = g.edge_index(e);
  if (id < 0) throw GraphError("no such edge");
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != id) edges.push_back(g.edge(i));
  return Graph(g.vertex_count(), edges);
}

Graph drop_isolated(const Graph& g) {
  VertexSet keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) keep.set(v);
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, edges);
}

Graph k23_plus() {
  std::vector<Edge> edges = complete_bipartite(2, 3).edges();
  edges.push_back({0, 1});
  return Graph(5, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace gso

#include "gso/blocks.hpp"

#include <algorithm>
#include <functional>

#include "gso/contraction.hpp"

namespace gso {

const char* to_string(BlockClass c) {
  switch (c) {
    case BlockClass::hair: return "hair";
    case BlockClass::bridge: return "bridge";
    case BlockClass::cycle: return "cycle";
    case BlockClass::essential: return "essential";
  }
  return "?";
}

namespace {

struct Tarjan {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;  // edge ids
  int timer = 0;

  explicit Tarjan(const Graph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void dfs(int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    g.neighbours(v).for_each([&](int u) {
      int e = g.edge_index(v, u);
      if (e == parent_edge) return;
      if (disc[u] < 0) {
        edge_stack.push_back(e);
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<int> block;
          for (;;) {
            int f = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(f);
            if (f == e) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[u]);
      }
    });
  }
};

// Chords (i, j) and (k, l) on cycle positions cross iff exactly one of k, l lies strictly
// between i and j.
bool crosses(int i, int j, int k, int l) {
  if (i > j) std::swap(i, j);
  auto inside = [&](int x) { return i < x && x < j; };
  if (k == i || k == j || l == i || l == j) return false;
  return inside(k) != inside(l);
}

bool chords_non_crossing(const Graph& g, const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : g.edges()) {
    int a = pos[e.u], b = pos[e.v];
    int d = std::abs(a - b);
    if (d == 1 || d == n - 1) continue;
    chords.push_back({a, b});
  }
  for (std::size_t x = 0; x < chords.size(); ++x)
    for (std::size_t y = x + 1; y < chords.size(); ++y)
      if (crosses(chords[x].first, chords[x].second, chords[y].first, chords[y].second))
        return false;
  return true;
}

// Enumerates Hamiltonian cycles starting at vertex 0 until `accept` returns true.
bool find_hamiltonian_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& accept,
                            std::vector<int>& out) {
  const int n = g.vertex_count();
  std::vector<int> path{0};
  VertexSet used = VertexSet::single(0);
  std::function<bool()> rec = [&]() -> bool {
    int v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (!g.adjacent(v, 0)) return false;
      // Each cycle appears in two directions; keep one.
      if (n > 2 && path[1] > path.back()) return false;
      if (accept(path)) {
        out = path;
        return true;
      }
      return false;
    }
    bool found = false;
    g.neighbours(v).for_each([&](int u) {
      if (found || used.test(u)) return;
      used.set(u);
      path.push_back(u);
      found = rec();
      path.pop_back();
      used.reset(u);
    });
    return found;
  };
  return rec();
}

void split_faces(const Graph& g, std::vector<int> poly, std::vector<Face>& faces) {
  const int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (!g.adjacent(poly[i], poly[j])) continue;
      std::vector<int> a(poly.begin() + i, poly.begin() + j + 1);
      std::vector<int> b(poly.begin() + j, poly.end());
      b.insert(b.end(), poly.begin(), poly.begin() + i + 1);
      split_faces(g, std::move(a), faces);
      split_faces(g, std::move(b), faces);
      return;
    }
  faces.push_back(Face{std::move(poly), 0, false});
}

}  // namespace

std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() > 2 * n - 3) return std::nullopt;
  std::vector<int> cycle;
  if (!find_hamiltonian_cycle(
          g, [&](const std::vector<int>& c) { return chords_non_crossing(g, c); }, cycle))
    return std::nullopt;
  OuterplanarEmbedding emb;
  emb.cycle = cycle;
  std::vector<bool> on_cycle(g.edge_count(), false);
  for (int i = 0; i < n; ++i) {
    Edge e = make_edge(cycle[i], cycle[(i + 1) % n]);
    on_cycle[g.edge_index(e)] = true;
    emb.outer_edges.push_back(e);
  }
  std::sort(emb.outer_edges.begin(), emb.outer_edges.end());
  for (int e = 0; e < g.edge_count(); ++e)
    if (!on_cycle[e]) emb.chords.push_back(g.edge(e));
  split_faces(g, cycle, emb.faces);
  for (Face& f : emb.faces) {
    const int k = static_cast<int>(f.vertices.size());
    for (int i = 0; i < k; ++i)
      if (!on_cycle[g.edge_index(f.vertices[i], f.vertices[(i + 1) % k])]) ++f.chord_sides;
    f.haploid = f.chord_sides <= 1;
  }
  return emb;
}

BlockDecomposition blocks_and_cuts(const Graph& g) {
  if (!is_connected(g)) throw GraphError("blocks_and_cuts: graph is disconnected");
  BlockDecomposition d;
  d.blocks_of_vertex.assign(g.vertex_count(), {});
  if (g.vertex_count() == 0) return d;
  Tarjan t(g);
  t.dfs(0, -1);
  std::sort(t.blocks.begin(), t.blocks.end());
  for (auto& edges : t.blocks) {
    Block b;
    b.edges = edges;
    for (int e : edges) {
      b.vertices.set(g.edge(e).u);
      b.vertices.set(g.edge(e).v);
    }
    d.blocks.push_back(std::move(b));
  }
  for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i)
    d.blocks[i].vertices.for_each([&](int v) { d.blocks_of_vertex[v].push_back(i); });
  for (int v = 0; v < g.vertex_count(); ++v)
    if (d.blocks_of_vertex[v].size() >= 2) d.cut_vertices.set(v);

  std::vector<int> hair_count(g.vertex_count(), 0);
  for (Block& b : d.blocks) {
    b.cut_vertices = (b.vertices & d.cut_vertices).members();
    const int nv = b.vertices.count();
    const int ne = static_cast<int>(b.edges.size());
    if (ne == 1) {
      const Edge& e = g.edge(b.edges[0]);
      int leaves = (g.degree(e.u) == 1) + (g.degree(e.v) == 1);
      b.cls = leaves == 1 ? BlockClass::hair : BlockClass::bridge;
      if (b.cls == BlockClass::hair) ++hair_count[g.degree(e.u) == 1 ? e.v : e.u];
      continue;
    }
    b.cls = ne == nv ? BlockClass::cycle : BlockClass::essential;
    std::vector<int> old;
    Graph bg = induced_subgraph(g, b.vertices, &old);
    if (auto emb = outerplanar_embedding(bg)) {
      auto back = [&](Edge e) { return make_edge(old[e.u], old[e.v]); };
      for (int& v : emb->cycle) v = old[v];
      for (Edge& e : emb->outer_edges) e = back(e);
      for (Edge& e : emb->chords) e = back(e);
      std::sort(emb->outer_edges.begin(), emb->outer_edges.end());
      std::sort(emb->chords.begin(), emb->chords.end());
      for (Face& f : emb->faces)
        for (int& v : f.vertices) v = old[v];
      b.embedding = std::move(emb);
    }
  }
  d.cut_vertices.for_each([&](int c) {
    if (hair_count[c] == 1) d.light_cut_vertices.set(c);
  });
  return d;
}

bool is_outerplanar(const Graph& g) {
  if (g.vertex_count() >= 3 && g.edge_count() > 2 * g.vertex_count() - 3) return false;
  static const Graph k4 = complete_graph(4);
  static const Graph k23 = complete_bipartite(2, 3);
  for (const VertexSet& comp : components(g)) {
    Graph c = induced_subgraph(g, comp);
    if (c.edge_count() < 5) continue;
    BlockDecomposition d = blocks_and_cuts(c);
    for (const Block& b : d.blocks) {
      if (b.edges.size() < 5) continue;
      Graph bg = induced_subgraph(c, b.vertices);
      if (is_minor(k4, bg) || is_minor(k23, bg)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> pieces_at(const Graph& g, int x) {
  VertexSet rest = g.vertices();
  rest.reset(x);
  std::vector<VertexSet> out;
  for (VertexSet comp : components(g, rest)) {
    comp.set(x);
    out.push_back(comp);
  }
  return out;
}

}  // namespace gso

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gso/bits.hpp"

namespace gso {

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalised so that u < v.
constexpr Edge make_edge(int a, int b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subset of the edges of some host graph, indexed by the host's edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe);

  static EdgeSet full(int universe);
  static EdgeSet of(int universe, std::initializer_list<int> members);

  int universe() const noexcept { return universe_; }
  void insert(int e);
  void erase(int e);
  bool contains(int e) const;
  int size() const noexcept;
  bool empty() const noexcept;
  std::vector<int> members() const;
  bool subset_of(const EdgeSet& o) const;
  bool intersects(const EdgeSet& o) const;

  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator-=(const EdgeSet& o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t x = words_[i];
      while (x) {
        f(static_cast<int>(64 * i) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

 private:
  void check_index(int e) const;
  void check_universe(const EdgeSet& o) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept in lexicographic
// order, which fixes edge ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicate edges are merged; loops and out-of-range ends throw.
  Graph(int n, const std::vector<Edge>& edges);
  static Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  // -1 when u and v are not adjacent.
  int edge_index(int u, int v) const;
  int edge_index(Edge e) const { return edge_index(e.u, e.v); }

  VertexSet vertices() const { return VertexSet::prefix(n_); }
  EdgeSet no_edges() const { return EdgeSet(edge_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
  EdgeSet incident_edges(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<int> edge_id_;  // n*n table
};

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by `subset` (the empty set counts as connected).
bool is_connected(const Graph& g, const VertexSet& subset);
// Connectivity of the subgraph formed by the edges in `f` (the empty set counts as connected).
bool edges_connected(const Graph& g, const EdgeSet& f);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);

// Vertices that carry an edge of f.
VertexSet covered_vertices(const Graph& g, const EdgeSet& f);
// Vertices incident both to an edge of f and to an edge outside f.
VertexSet boundary(const Graph& g, const EdgeSet& f);

// new_id[old] gives the new name of each vertex; must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& new_id);
// Induced subgraph with vertices renumbered in increasing order; old_ids receives the map back.
Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* old_ids = nullptr);
// Subgraph formed by the given edges (on the same vertex ids, other vertices isolated).
Graph edge_subgraph(const Graph& g, const EdgeSet& f);

// Merged vertex keeps the smaller id; larger ids above the removed one shift down.
Graph contract_edge(const Graph& g, Edge e);
// Vertex map used by contract_edge: old id -> new id.
std::vector<int> contraction_map(int n, Edge e);
Graph delete_edge(const Graph& g, Edge e);
Graph drop_isolated(const Graph& g);
// Disjoint union with the vertices of b shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Centre 0, leaves 1..leaves.
Graph star_graph(int leaves);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
// K_2,3 plus the edge joining its two degree-3 vertices (0 and 1).
Graph k23_plus();

std::string to_string(const Graph& g);

}  // namespace gso

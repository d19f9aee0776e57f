#include "gso/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gso {

namespace {

// Ordered partition refinement: cell[v] is the index of v's cell, cells ordered.
int refine(const Graph& g, std::vector<int>& cell, int cells) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(cells + 1, 0);
      sig[v][0] = cell[v];
      g.neighbours(v).for_each([&](int u) { ++sig[v][1 + cell[u]]; });
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      cell[order[i]] = next;
    }
    int fresh = n ? next + 1 : 0;
    if (fresh == cells) return cells;
    cells = fresh;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

class Canonizer {
 public:
  Canonizer(const Graph& g, const std::vector<int>& colours) : g_(g), n_(g.vertex_count()) {
    colours_ = colours.empty() ? std::vector<int>(n_, 0) : colours;
    if (static_cast<int>(colours_.size()) != n_) throw GraphError("colour vector size mismatch");
  }

  CanonicalForm run() {
    std::vector<int> cell(n_);
    std::map<int, int> rank;
    for (int c : colours_) rank[c] = 0;
    int r = 0;
    for (auto& [c, idx] : rank) idx = r++;
    for (int v = 0; v < n_; ++v) cell[v] = rank[colours_[v]];
    int cells = refine(g_, cell, n_ ? r : 0);
    search(cell, cells);
    return {best_cert_, best_lab_};
  }

 private:
  std::string certificate(const std::vector<int>& lab) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[lab[v]] = v;
    std::string s;
    s.push_back(static_cast<char>(n_ >> 8));
    s.push_back(static_cast<char>(n_ & 0xff));
    for (int i = 0; i < n_; ++i) {
      int c = colours_[inv[i]];
      s.push_back(static_cast<char>((c >> 8) & 0xff));
      s.push_back(static_cast<char>(c & 0xff));
    }
    unsigned char acc = 0;
    int nbits = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        acc = static_cast<unsigned char>((acc << 1) | (g_.adjacent(inv[i], inv[j]) ? 1 : 0));
        if (++nbits == 8) {
          s.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits) s.push_back(static_cast<char>(acc << (8 - nbits)));
    return s;
  }

  bool fixes_prefix(const std::vector<int>& gamma, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i)
      if (gamma[prefix_[i]] != prefix_[i]) return false;
    return true;
  }

  // True if w lies in the orbit of an already tried child at this depth, under the
  // automorphisms found so far that fix the prefix of length `depth` pointwise.
  bool redundant(int w, std::size_t depth) const {
    const auto& tried = tried_[depth];
    if (tried.empty()) return false;
    UnionFind uf(n_);
    for (const auto& gamma : autos_)
      if (fixes_prefix(gamma, depth))
        for (int v = 0; v < n_; ++v) uf.join(v, gamma[v]);
    for (int t : tried)
      if (uf.find(t) == uf.find(w)) return true;
    return false;
  }

  void leaf(const std::vector<int>& cell) {
    std::string cert = certificate(cell);
    if (best_lab_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = cell;
      return;
    }
    if (cert != best_cert_) return;
    std::vector<int> inv_best(n_);
    for (int v = 0; v < n_; ++v) inv_best[best_lab_[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv_best[cell[v]];
      identity = identity && gamma[v] == v;
    }
    if (identity) return;
    autos_.push_back(std::move(gamma));
    // Back-jump to the shallowest level whose current branch became redundant.
    for (std::size_t d = 0; d < prefix_.size(); ++d) {
      if (!fixes_prefix(autos_.back(), d)) break;
      auto& tried = tried_[d];
      int current = prefix_[d];
      tried.erase(std::remove(tried.begin(), tried.end(), current), tried.end());
      bool red = redundant(current, d);
      tried.push_back(current);
      if (red) {
        jump_to_ = static_cast<int>(d);
        return;
      }
    }
  }

  void search(const std::vector<int>& cell, int cells) {
    if (cells == n_) {
      leaf(cell);
      return;
    }
    int target = -1;
    std::vector<int> size(cells, 0);
    for (int v = 0; v < n_; ++v) ++size[cell[v]];
    for (int c = 0; c < cells; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    std::size_t depth = prefix_.size();
    if (tried_.size() <= depth) tried_.resize(depth + 1);
    tried_[depth].clear();
    for (int w = 0; w < n_; ++w) {
      if (cell[w] != target) continue;
      if (redundant(w, depth)) continue;
      tried_[depth].push_back(w);
      std::vector<int> child(cell);
      for (int v = 0; v < n_; ++v)
        if (cell[v] > target || (cell[v] == target && v != w)) ++child[v];
      int child_cells = refine(g_, child, cells + 1);
      prefix_.push_back(w);
      search(child, child_cells);
      prefix_.pop_back();
      if (jump_to_ >= 0) {
        if (static_cast<std::size_t>(jump_to_) < depth) return;
        jump_to_ = -1;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colours_;
  std::string best_cert_;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> prefix_;
  std::vector<std::vector<int>> tried_;
  int jump_to_ = -1;
};

std::vector<int> root_colours(const RootedGraph& rg) {
  std::vector<int> c(rg.graph.vertex_count(), 0);
  for (int v = 0; v < rg.graph.vertex_count(); ++v)
    c[v] = (rg.s_in.test(v) ? 1 : 0) + (rg.s_out.test(v) ? 2 : 0);
  return c;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours) {
  if (g.vertex_count() == 0) return {std::string(2, '\0'), {}};
  return Canonizer(g, colours).run();
}

CanonicalForm canonical_form(const RootedGraph& rg) {
  return canonical_form(rg.graph, root_colours(rg));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

bool is_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count() ||
      a.graph.edge_count() != b.graph.edge_count())
    return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labelling); }

RootedGraph canonical_rooted(const RootedGraph& rg) {
  auto lab = canonical_form(rg).labelling;
  VertexSet in, out;
  rg.s_in.for_each([&](int v) { in.set(lab[v]); });
  rg.s_out.for_each([&](int v) { out.set(lab[v]); });
  return RootedGraph(relabel(rg.graph, lab), in, out);
}

}  // namespace gso

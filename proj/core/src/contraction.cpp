#include "gso/contraction.hpp"

#include <algorithm>
#include <set>

#include "gso/canonical.hpp"
#include "gso/parallel.hpp"

namespace gso {

const char* to_string(Relation r) { return r == Relation::contraction ? "contraction" : "minor"; }

Relation parse_relation(const std::string& s) {
  if (s == "contraction" || s == "c") return Relation::contraction;
  if (s == "minor" || s == "m") return Relation::minor;
  throw std::invalid_argument("unknown relation '" + s + "' (expected contraction or minor)");
}

namespace {

struct BudgetExhausted {};

class Matcher {
 public:
  Matcher(const Graph& h, const VertexSet& h_in, const VertexSet& h_out, const Graph& g,
          const VertexSet& g_in, const VertexSet& g_out, Relation rel, std::uint64_t budget)
      : h_(h), h_in_(h_in), h_out_(h_out), g_(g), g_in_(g_in), g_out_(g_out), rel_(rel),
        budget_(budget), k_(h.vertex_count()), n_(g.vertex_count()) {}

  ContainmentResult run() {
    ContainmentResult r;
    try {
      r.status = quick_reject() ? SearchStatus::not_found : search();
    } catch (const BudgetExhausted&) {
      r.status = SearchStatus::budget_exceeded;
    }
    r.nodes = nodes_;
    if (r.status == SearchStatus::found) r.witness = witness_;
    return r;
  }

 private:
  bool quick_reject() const {
    if (k_ > n_) return true;
    if (k_ == 0) return n_ != 0;
    if (h_.edge_count() > g_.edge_count()) return true;
    if (h_in_.count() > g_in_.count() || h_out_.count() > g_out_.count()) return true;
    if (h_in_.none() != g_in_.none() || h_out_.none() != g_out_.none()) return true;
    return false;
  }

  void tick() {
    if (budget_ && ++nodes_ > budget_) throw BudgetExhausted{};
    if (!budget_) ++nodes_;
  }

  SearchStatus search() {
    // Breadth-first order per component keeps partial blocks close to connected.
    VertexSet seen;
    for (int s = 0; s < n_; ++s) {
      if (seen.test(s)) continue;
      std::vector<int> queue{s};
      seen.set(s);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        g_.neighbours(queue[i]).for_each([&](int u) {
          if (!seen.test(u)) {
            seen.set(u);
            queue.push_back(u);
          }
        });
      }
    }
    block_of_.assign(n_, -1);
    members_.assign(k_, VertexSet{});
    unassigned_ = g_.vertices();
    return assign(0) ? SearchStatus::found : SearchStatus::not_found;
  }

  bool feasible() const {
    if (k_ - used_ > unassigned_.count()) return false;
    int in_blocks = 0, out_blocks = 0;
    for (int b = 0; b < used_; ++b) {
      if (members_[b].intersects(g_in_)) ++in_blocks;
      if (members_[b].intersects(g_out_)) ++out_blocks;
    }
    if (in_blocks > h_in_.count() || out_blocks > h_out_.count()) return false;
    for (int b = 0; b < used_; ++b) {
      const VertexSet allowed = members_[b] | unassigned_;
      VertexSet reach = VertexSet::single(members_[b].first());
      VertexSet frontier = reach;
      while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g_.neighbours(v); });
        next &= allowed;
        next.remove(reach);
        reach |= next;
        frontier = next;
        if (members_[b].subset_of(reach)) break;
      }
      if (!members_[b].subset_of(reach)) return false;
    }
    return true;
  }

  bool assign(std::size_t idx) {
    tick();
    if (idx == order_.size()) return used_ == k_ && match_quotient();
    const int v = order_[idx];
    unassigned_.reset(v);
    for (int b = 0; b <= used_ && b < k_; ++b) {
      const bool fresh = b == used_;
      if (fresh) ++used_;
      members_[b].set(v);
      block_of_[v] = b;
      if (feasible() && assign(idx + 1)) return true;
      members_[b].reset(v);
      block_of_[v] = -1;
      if (fresh) --used_;
    }
    unassigned_.set(v);
    return false;
  }

  bool match_quotient() {
    quotient_.assign(k_, VertexSet{});
    int qedges = 0;
    for (const Edge& e : g_.edges()) {
      int a = block_of_[e.u], b = block_of_[e.v];
      if (a != b && !quotient_[a].test(b)) {
        quotient_[a].set(b);
        quotient_[b].set(a);
        ++qedges;
      }
    }
    if (rel_ == Relation::contraction && qedges != h_.edge_count()) return false;
    if (qedges < h_.edge_count()) return false;
    q_in_.assign(k_, false);
    q_out_.assign(k_, false);
    for (int b = 0; b < k_; ++b) {
      q_in_[b] = members_[b].intersects(g_in_);
      q_out_[b] = members_[b].intersects(g_out_);
    }
    image_.assign(k_, -1);
    taken_ = VertexSet{};
    return map_block(0);
  }

  bool map_block(int b) {
    tick();
    if (b == k_) {
      witness_.phi.assign(n_, -1);
      for (int v = 0; v < n_; ++v) witness_.phi[v] = image_[block_of_[v]];
      return true;
    }
    const int qdeg = quotient_[b].count();
    for (int x = 0; x < k_; ++x) {
      if (taken_.test(x)) continue;
      if (q_in_[b] != h_in_.test(x) || q_out_[b] != h_out_.test(x)) continue;
      const int hdeg = h_.degree(x);
      if (rel_ == Relation::contraction ? hdeg != qdeg : hdeg > qdeg) continue;
      bool ok = true;
      for (int c = 0; c < b && ok; ++c) {
        bool qa = quotient_[b].test(c), ha = h_.adjacent(x, image_[c]);
        ok = rel_ == Relation::contraction ? qa == ha : (!ha || qa);
      }
      if (!ok) continue;
      image_[b] = x;
      taken_.set(x);
      if (map_block(b + 1)) return true;
      taken_.reset(x);
      image_[b] = -1;
    }
    return false;
  }

  const Graph& h_;
  VertexSet h_in_, h_out_;
  const Graph& g_;
  VertexSet g_in_, g_out_;
  Relation rel_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int k_, n_;

  std::vector<int> order_;
  std::vector<int> block_of_;
  std::vector<VertexSet> members_;
  VertexSet unassigned_;
  int used_ = 0;

  std::vector<VertexSet> quotient_;
  std::vector<bool> q_in_, q_out_;
  std::vector<int> image_;
  VertexSet taken_;
  ContractionWitness witness_;
};

}  // namespace

ContainmentResult find_containment(const RootedGraph& h, const RootedGraph& g, Relation rel,
                                   std::uint64_t node_budget) {
  return Matcher(h.graph, h.s_in, h.s_out, g.graph, g.s_in, g.s_out, rel, node_budget).run();
}

ContainmentResult find_containment(const Graph& h, const Graph& g, Relation rel,
                                   std::uint64_t node_budget) {
  return Matcher(h, {}, {}, g, {}, {}, rel, node_budget).run();
}

std::optional<ContractionWitness> is_contraction(const RootedGraph& h, const RootedGraph& g) {
  return find_containment(h, g, Relation::contraction).witness;
}

std::optional<ContractionWitness> is_contraction(const Graph& h, const Graph& g) {
  return find_containment(h, g, Relation::contraction).witness;
}

std::optional<ContractionWitness> is_minor(const Graph& h, const Graph& g) {
  return find_containment(h, g, Relation::minor).witness;
}

bool verify_witness(const RootedGraph& h, const RootedGraph& g, Relation rel,
                    const ContractionWitness& w) {
  const int k = h.graph.vertex_count(), n = g.graph.vertex_count();
  if (static_cast<int>(w.phi.size()) != n) return false;
  std::vector<VertexSet> fibre(k);
  for (int v = 0; v < n; ++v) {
    if (w.phi[v] < 0 || w.phi[v] >= k) return false;
    fibre[w.phi[v]].set(v);
  }
  for (int x = 0; x < k; ++x)
    if (fibre[x].none() || !is_connected(g.graph, fibre[x])) return false;
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      bool joined = is_connected(g.graph, fibre[x] | fibre[y]);
      bool adj = h.graph.adjacent(x, y);
      if (rel == Relation::contraction ? joined != adj : (adj && !joined)) return false;
    }
  VertexSet in, out;
  g.s_in.for_each([&](int v) { in.set(w.phi[v]); });
  g.s_out.for_each([&](int v) { out.set(w.phi[v]); });
  return in == h.s_in && out == h.s_out;
}

std::vector<Graph> proper_contractions(const Graph& g) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const Edge& e : g.edges()) {
    Graph c = contract_edge(g, e);
    if (seen.insert(canonical_form(c).certificate).second) out.push_back(std::move(c));
  }
  return out;
}

int first_contained(const RootedGraph& g, const std::vector<RootedGraph>& family, Relation rel) {
  std::vector<char> hit(family.size(), 0);
  parallel_for(family.size(), [&](std::size_t i) {
    hit[i] = find_containment(family[i], g, rel).found() ? 1 : 0;
  });
  for (std::size_t i = 0; i < family.size(); ++i)
    if (hit[i]) return static_cast<int>(i);
  return -1;
}

bool contains_any(const RootedGraph& g, const std::vector<RootedGraph>& family, Relation rel) {
  return first_contained(g, family, rel) >= 0;
}

bool contains_any(const Graph& g, const std::vector<Graph>& family, Relation rel) {
  for (const Graph& h : family)
    if (find_containment(h, g, rel).found()) return true;
  return false;
}

}  // namespace gso

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "gso/bits.hpp"
#include "gso/solvers.hpp"

namespace gso {

namespace {

struct OutOfBudget {};

template <std::size_t W>
class ExpansionSearch {
  using Set = Bits<W>;

 public:
  ExpansionSearch(const Enhancement& h, int k, bool connected, const SolveOptions& opts,
                  const ExpansionConstraints& cons)
      : h_(h), k_(k), connected_(connected), budget_(opts.node_budget) {
    const Graph& g = h.host;
    n_ = g.vertex_count();
    m_ = g.edge_count();
    inc_.assign(n_, Set{});
    for (int e = 0; e < m_; ++e) {
      const Edge& ed = g.edge(e);
      ends_.push_back(ed);
      inc_[ed.u].set(e);
      inc_[ed.v].set(e);
      if (g.degree(ed.u) == 1 || g.degree(ed.v) == 1) pendant_.set(e);
      if (g.degree(ed.u) == 1 && g.degree(ed.v) == 1) isolated_.set(e);
    }
    h.e_in.for_each([&](int e) { e_in_.set(e); });
    h.goal().for_each([&](int e) { goal_.set(e); });
    if (cons.first_edge >= 0) first_ = h.host_edge_of_base.at(cons.first_edge);
    if (cons.last_edge >= 0) last_ = h.host_edge_of_base.at(cons.last_edge);
  }

  std::optional<std::vector<int>> run() {
    if (cost_of(e_in_, -1) > k_) return std::nullopt;
    if (e_in_ == goal_) {
      if (first_ >= 0 || last_ >= 0) return std::nullopt;
      return std::vector<int>{};
    }
    if (dfs(e_in_)) return path_;
    return std::nullopt;
  }

  std::uint64_t states() const { return states_; }

 private:
  bool touches(const Set& a, int v) const { return inc_[v].intersects(a); }
  bool on_boundary(const Set& a, int v) const {
    return inc_[v].intersects(a) && !inc_[v].subset_of(a);
  }

  int boundary_count(const Set& a) const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
      if (on_boundary(a, v)) ++c;
    return c;
  }

  int q_of(const Set& a, int added) const {
    const int size = a.count();
    if (size >= 2 && added >= 0 && pendant_.test(added)) return 1;
    if (size == 1 && isolated_.intersects(a)) return 1;
    return 0;
  }

  int cost_of(const Set& a, int added) const { return boundary_count(a) + q_of(a, added); }

  bool dfs(const Set& a) {
    if (a == goal_) return true;
    if (!visited_.insert(a).second) return false;
    ++states_;
    if (budget_ && states_ > budget_) throw OutOfBudget{};

    const int bd = boundary_count(a);
    const int size = a.count();
    Set cand = goal_ - a;
    if (first_ >= 0 && a == e_in_) {
      if (!cand.test(first_)) return false;
      cand = Set::single(first_);
    }
    struct Option {
      int edge;
      int cost;
    };
    std::vector<Option> options;
    cand.for_each([&](int e) {
      const Edge& ed = ends_[e];
      if (connected_ && size > 0 && !touches(a, ed.u) && !touches(a, ed.v)) return;
      Set next = a;
      next.set(e);
      if (last_ >= 0 && e == last_ && next != goal_) return;
      int c = bd;
      for (int x : {ed.u, ed.v}) c += int(on_boundary(next, x)) - int(on_boundary(a, x));
      c += q_of(next, e);
      if (c <= k_) options.push_back({e, c});
    });
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) { return x.cost < y.cost; });
    for (const Option& o : options) {
      Set next = a;
      next.set(o.edge);
      path_.push_back(o.edge);
      if (dfs(next)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Enhancement& h_;
  int k_;
  bool connected_;
  std::uint64_t budget_;
  int n_ = 0, m_ = 0;
  std::vector<Edge> ends_;
  std::vector<Set> inc_;
  Set pendant_, isolated_, e_in_, goal_;
  int first_ = -1, last_ = -1;
  std::unordered_set<Set, BitsHash<W>> visited_;
  std::vector<int> path_;
  std::uint64_t states_ = 0;
};

template <std::size_t W>
DecideResult run_expansion(const Enhancement& h, int k, bool connected, const SolveOptions& opts,
                           const ExpansionConstraints& cons) {
  DecideResult r;
  ExpansionSearch<W> search(h, k, connected, opts, cons);
  try {
    auto path = search.run();
    r.verdict = path ? Verdict::yes : Verdict::no;
    if (path) {
      std::vector<int> base;
      for (int he : *path) base.push_back(h.base_edge_of_host[he]);
      r.expansion = expansion_from_order(h, base);
    }
  } catch (const OutOfBudget&) {
    r.verdict = Verdict::budget_exceeded;
  }
  r.stats.states = search.states();
  return r;
}

void check_constraints(const Graph& g, const ExpansionConstraints& cons) {
  for (int e : {cons.first_edge, cons.last_edge})
    if (e >= g.edge_count()) throw std::invalid_argument("constraint names a non-edge");
}

}  // namespace

DecideResult decide_expansion(const Graph& g, const VertexSet& s_in, const VertexSet& s_out, int k,
                              bool connected, const SolveOptions& opts,
                              const ExpansionConstraints& cons) {
  auto t0 = std::chrono::steady_clock::now();
  check_constraints(g, cons);
  const Enhancement h = enhance(g, s_in, s_out);
  const int m = h.host.edge_count();
  DecideResult r;
  if (k < 0) {
    r.verdict = Verdict::no;
  } else if (m <= 64) {
    r = run_expansion<1>(h, k, connected, opts, cons);
  } else if (m <= 128) {
    r = run_expansion<2>(h, k, connected, opts, cons);
  } else if (m <= 256) {
    r = run_expansion<4>(h, k, connected, opts, cons);
  } else if (m <= 512) {
    r = run_expansion<8>(h, k, connected, opts, cons);
  } else {
    throw std::invalid_argument("graph has too many edges for the expansion solver");
  }
  r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SolveResult expansion_value(const Graph& g, const VertexSet& s_in, const VertexSet& s_out,
                            bool connected, const SolveOptions& opts,
                            const ExpansionConstraints& cons) {
  SolveResult out;
  const int limit = g.vertex_count() + 3;
  for (int k = 0; k <= limit; ++k) {
    DecideResult d = decide_expansion(g, s_in, s_out, k, connected, opts, cons);
    out.stats.states += d.stats.states;
    out.stats.seconds += d.stats.seconds;
    if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
    if (d.yes()) {
      out.value = k;
      out.expansion = std::move(d.expansion);
      return out;
    }
  }
  throw std::invalid_argument("no expansion satisfies the constraints");
}

namespace {

void require_connected_in_roots(const RootedGraph& rg) {
  if (!is_connected(rg.graph, rg.s_in))
    throw std::invalid_argument("in-roots must induce a connected subgraph");
}

}  // namespace

DecideResult cmp_decide(const RootedGraph& rg, int k, const SolveOptions& opts,
                        const ExpansionConstraints& cons) {
  require_connected_in_roots(rg);
  return decide_expansion(rg.graph, rg.s_in, rg.s_out, k, true, opts, cons);
}

SolveResult cmp_value(const RootedGraph& rg, const SolveOptions& opts) {
  require_connected_in_roots(rg);
  return expansion_value(rg.graph, rg.s_in, rg.s_out, true, opts);
}

DecideResult mp_decide(const RootedGraph& rg, int k, const SolveOptions& opts) {
  return decide_expansion(rg.graph, rg.s_in, rg.s_out, k, false, opts);
}

SolveResult mp_value(const RootedGraph& rg, const SolveOptions& opts) {
  return expansion_value(rg.graph, rg.s_in, rg.s_out, false, opts);
}

DecideResult mp_decide(const Graph& g, int k, const SolveOptions& opts) {
  return decide_expansion(g, {}, {}, k, false, opts);
}

SolveResult mp_value(const Graph& g, const SolveOptions& opts) {
  return expansion_value(g, {}, {}, false, opts);
}

}  // namespace gso

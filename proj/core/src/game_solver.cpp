#include <chrono>
#include <unordered_map>

#include "gso/bits.hpp"
#include "gso/solvers.hpp"

namespace gso {

namespace {

struct OutOfBudget {};

template <std::size_t W>
class GameSearch {
  using Set = Bits<W>;

  struct State {
    Set clean;
    VertexSet pos;
    bool started = false;
    friend bool operator==(const State&, const State&) = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
      return s.clean.hash() * 31 + s.pos.hash() * 7 + std::size_t(s.started);
    }
  };

 public:
  GameSearch(const Graph& host, const Enhancement* h, int k, GameRules rules, const SolveOptions& opts)
      : g_(host), k_(k), rules_(rules), budget_(opts.node_budget) {
    n_ = g_.vertex_count();
    inc_.assign(n_, Set{});
    for (int e = 0; e < g_.edge_count(); ++e) {
      inc_[g_.edge(e).u].set(e);
      inc_[g_.edge(e).v].set(e);
    }
    all_ = Set::prefix(g_.edge_count());
    if (h) {
      rooted_ = true;
      h->e_in.for_each([&](int e) { e_in_.set(e); });
      h->e_out.for_each([&](int e) { e_out_.set(e); });
      h->start_region().for_each([&](int e) { region_.set(e); });
      entry_guard_ = boundary(g_, h->e_in);
      goal_ = all_ - e_out_;
    } else {
      goal_ = all_;
    }
  }

  std::optional<std::vector<Move>> run() {
    State start;
    start.started = e_in_.none();
    if (start.started && goal_.none()) return std::vector<Move>{};
    states_.push_back(start);
    parent_.push_back(-1);
    via_.push_back(Move{});
    index_.emplace(start, 0);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (budget_ && i >= budget_) throw OutOfBudget{};
      const State cur = states_[i];
      std::vector<Move> moves;
      if (cur.pos.count() < k_)
        for (int v = 0; v < n_; ++v)
          if (!cur.pos.test(v) && g_.degree(v) > 0) moves.push_back(Move::place(v));
      cur.pos.for_each([&](int v) { moves.push_back(Move::remove(v)); });
      cur.pos.for_each([&](int v) {
        (g_.neighbours(v) - cur.pos).for_each([&](int u) { moves.push_back(Move::slide(v, u)); });
      });
      for (const Move& m : moves) {
        std::optional<State> next = apply(cur, m);
        if (!next) continue;
        if (!index_.emplace(*next, static_cast<int>(states_.size())).second) continue;
        states_.push_back(*next);
        parent_.push_back(static_cast<int>(i));
        via_.push_back(m);
        if (next->started && next->clean == goal_) return witness(states_.size() - 1);
      }
    }
    return std::nullopt;
  }

  std::uint64_t states() const { return states_.size(); }

 private:
  std::optional<State> apply(const State& cur, const Move& m) const {
    State nx;
    nx.pos = cur.pos;
    int slide_edge = -1;
    switch (m.kind) {
      case MoveKind::place: nx.pos.set(m.v); break;
      case MoveKind::remove: nx.pos.reset(m.v); break;
      case MoveKind::slide:
        nx.pos.reset(m.v);
        nx.pos.set(m.u);
        slide_edge = g_.edge_index(m.v, m.u);
        break;
    }
    Set q = cur.clean;
    nx.pos.for_each([&](int v) {
      (g_.neighbours(v) & nx.pos).for_each([&](int u) {
        if (u > v) q.set(g_.edge_index(v, u));
      });
    });
    if (slide_edge >= 0) q.set(slide_edge);

    // Recontamination: unguarded vertices touching a dirty edge spread through
    // unguarded vertices.
    const Set dirty = all_ - q;
    const VertexSet unguarded = g_.vertices() - nx.pos;
    VertexSet reach;
    unguarded.for_each([&](int v) {
      if (inc_[v].intersects(dirty)) reach.set(v);
    });
    VertexSet frontier = reach;
    while (frontier.any()) {
      VertexSet more;
      frontier.for_each([&](int v) { more |= g_.neighbours(v); });
      more &= unguarded;
      more.remove(reach);
      reach |= more;
      frontier = more;
    }
    nx.clean = q;
    reach.for_each([&](int v) { nx.clean.remove(inc_[v]); });

    if (rules_.monotone && nx.clean != q) return std::nullopt;
    if (rules_.connected && !connected(nx.clean)) return std::nullopt;
    if (rooted_) {
      if (nx.clean.intersects(e_out_)) return std::nullopt;
      if (!cur.started && !nx.clean.subset_of(region_)) return std::nullopt;
    }
    nx.started = cur.started || (e_in_.subset_of(nx.clean) && entry_guard_.subset_of(nx.pos));
    return nx;
  }

  bool connected(const Set& c) const {
    const int first = c.first();
    if (first < 0) return true;
    VertexSet seen;
    seen.set(g_.edge(first).u);
    Set reached;
    std::vector<int> stack{g_.edge(first).u};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const Set here = inc_[v] & c;
      reached |= here;
      here.for_each([&](int e) {
        const int w = g_.edge(e).u == v ? g_.edge(e).v : g_.edge(e).u;
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      });
    }
    return reached == c;
  }

  std::vector<Move> witness(std::size_t at) const {
    std::vector<Move> out;
    for (int i = static_cast<int>(at); parent_[i] >= 0; i = parent_[i]) out.push_back(via_[i]);
    return {out.rbegin(), out.rend()};
  }

  const Graph& g_;
  int k_;
  GameRules rules_;
  std::uint64_t budget_;
  int n_ = 0;
  bool rooted_ = false;
  std::vector<Set> inc_;
  Set all_, goal_, e_in_, e_out_, region_;
  VertexSet entry_guard_;  // in-roots with a base edge, all guarded when the search starts
  std::vector<State> states_;
  std::vector<int> parent_;
  std::vector<Move> via_;
  std::unordered_map<State, int, StateHash> index_;
};

template <std::size_t W>
DecideResult run_game(const Graph& host, const Enhancement* h, int k, GameRules rules,
                      const SolveOptions& opts) {
  DecideResult r;
  GameSearch<W> search(host, h, k, rules, opts);
  try {
    r.strategy = search.run();
    r.verdict = r.strategy ? Verdict::yes : Verdict::no;
  } catch (const OutOfBudget&) {
    r.verdict = Verdict::budget_exceeded;
  }
  r.stats.states = search.states();
  return r;
}

}  // namespace

DecideResult game_decide(const Graph& g, const VertexSet& s_in, const VertexSet& s_out, int k,
                         GameRules rules, const SolveOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<Enhancement> h;
  if (s_in.any() || s_out.any()) h = enhance(g, s_in, s_out);
  const Graph& host = h ? h->host : g;
  const Enhancement* hp = h ? &*h : nullptr;
  const int m = host.edge_count();
  DecideResult r;
  if (k < 0) {
    r.verdict = Verdict::no;
  } else if (m <= 64) {
    r = run_game<1>(host, hp, k, rules, opts);
  } else if (m <= 128) {
    r = run_game<2>(host, hp, k, rules, opts);
  } else if (m <= 256) {
    r = run_game<4>(host, hp, k, rules, opts);
  } else {
    throw std::invalid_argument("graph has too many edges for the game solver");
  }
  r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SolveResult game_value(const Graph& g, const VertexSet& s_in, const VertexSet& s_out,
                       GameRules rules, const SolveOptions& opts) {
  SolveResult out;
  const int limit = g.vertex_count() + 2;
  for (int k = 0; k <= limit; ++k) {
    DecideResult d = game_decide(g, s_in, s_out, k, rules, opts);
    out.stats.states += d.stats.states;
    out.stats.seconds += d.stats.seconds;
    if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
    if (d.yes()) {
      out.value = k;
      out.strategy = std::move(d.strategy);
      return out;
    }
  }
  throw std::invalid_argument("the game has no winning strategy");
}

namespace {

constexpr GameRules kCms{false, true};
constexpr GameRules kCmms{true, true};
constexpr GameRules kMs{true, false};

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("connected search needs a connected graph");
}

}  // namespace

DecideResult cms_decide(const Graph& g, int k, const SolveOptions& opts) {
  require_connected(g);
  return game_decide(g, {}, {}, k, kCms, opts);
}
SolveResult cms_value(const Graph& g, const SolveOptions& opts) {
  require_connected(g);
  return game_value(g, {}, {}, kCms, opts);
}
DecideResult cmms_decide(const Graph& g, int k, const SolveOptions& opts) {
  require_connected(g);
  return game_decide(g, {}, {}, k, kCmms, opts);
}
SolveResult cmms_value(const Graph& g, const SolveOptions& opts) {
  require_connected(g);
  return game_value(g, {}, {}, kCmms, opts);
}
DecideResult ms_decide(const Graph& g, int k, const SolveOptions& opts) {
  return game_decide(g, {}, {}, k, kMs, opts);
}
SolveResult ms_value(const Graph& g, const SolveOptions& opts) {
  return game_value(g, {}, {}, kMs, opts);
}

const char* to_string(Param p) {
  switch (p) {
    case Param::ms: return "ms";
    case Param::cms: return "cms";
    case Param::cmms: return "cmms";
    case Param::cmp: return "cmp";
    case Param::mp: return "mp";
  }
  return "?";
}

Param parse_param(const std::string& s) {
  for (Param p : {Param::ms, Param::cms, Param::cmms, Param::cmp, Param::mp})
    if (s == to_string(p)) return p;
  throw std::invalid_argument("unknown parameter '" + s + "' (expected ms, cms, cmms, cmp or mp)");
}

DecideResult param_decide(Param p, const Graph& g, int k, const SolveOptions& opts) {
  switch (p) {
    case Param::ms: return ms_decide(g, k, opts);
    case Param::cms: return cms_decide(g, k, opts);
    case Param::cmms: return cmms_decide(g, k, opts);
    case Param::cmp: return cmp_decide(RootedGraph(g), k, opts);
    case Param::mp: return mp_decide(g, k, opts);
  }
  throw std::invalid_argument("unknown parameter");
}

SolveResult param_value(Param p, const Graph& g, const SolveOptions& opts) {
  switch (p) {
    case Param::ms: return ms_value(g, opts);
    case Param::cms: return cms_value(g, opts);
    case Param::cmms: return cmms_value(g, opts);
    case Param::cmp: return cmp_value(RootedGraph(g), opts);
    case Param::mp: return mp_value(g, opts);
  }
  throw std::invalid_argument("unknown parameter");
}

}  // namespace gso

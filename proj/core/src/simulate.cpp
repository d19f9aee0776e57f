#include <numeric>
#include <sstream>

#include "gso/search.hpp"

namespace gso {

std::string to_string(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::place: os << "p(" << m.v << ")"; break;
    case MoveKind::remove: os << "r(" << m.v << ")"; break;
    case MoveKind::slide: os << "s(" << m.v << "," << m.u << ")"; break;
  }
  return os.str();
}

std::string to_string(const std::vector<Move>& moves) {
  std::string s;
  for (const Move& m : moves) {
    if (!s.empty()) s += ' ';
    s += to_string(m);
  }
  return s;
}

int TraceStep::searcher_count() const { return std::accumulate(searchers.begin(), searchers.end(), 0); }

EdgeSet recontamination_closure(const Graph& g, const EdgeSet& q, const VertexSet& guarded) {
  const VertexSet unguarded = g.vertices() - guarded;
  // Unguarded vertices touching a dirty edge, then everything they reach through
  // unguarded vertices.
  VertexSet reach;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (q.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (unguarded.test(ed.u)) reach.set(ed.u);
    if (unguarded.test(ed.v)) reach.set(ed.v);
  }
  VertexSet frontier = reach;
  while (frontier.any()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbours(v); });
    next &= unguarded;
    next.remove(reach);
    reach |= next;
    frontier = next;
  }
  EdgeSet out = q;
  q.for_each([&](int e) {
    if (reach.test(g.edge(e).u) || reach.test(g.edge(e).v)) out.erase(e);
  });
  return out;
}

Trace simulate(const Graph& g, const std::vector<Move>& moves) {
  const int n = g.vertex_count();
  Trace t;
  t.graph = g;
  TraceStep s0;
  s0.searchers.assign(n, 0);
  s0.clean = s0.newly_cleaned = s0.pre_closure = g.no_edges();
  t.steps.push_back(s0);
  int step = 0;
  for (const Move& m : moves) {
    ++step;
    const TraceStep& prev = t.steps.back();
    TraceStep cur;
    cur.searchers = prev.searchers;
    auto check_vertex = [&](int v) {
      if (v < 0 || v >= n) throw MoveError("vertex " + std::to_string(v) + " out of range", step);
    };
    check_vertex(m.v);
    switch (m.kind) {
      case MoveKind::place: ++cur.searchers[m.v]; break;
      case MoveKind::remove:
        if (cur.searchers[m.v] == 0)
          throw MoveError("no searcher to remove on vertex " + std::to_string(m.v), step);
        --cur.searchers[m.v];
        break;
      case MoveKind::slide:
        check_vertex(m.u);
        if (cur.searchers[m.v] == 0)
          throw MoveError("no searcher to slide from vertex " + std::to_string(m.v), step);
        if (!g.adjacent(m.v, m.u))
          throw MoveError("slide along a non-edge " + std::to_string(m.v) + "-" + std::to_string(m.u),
                          step);
        --cur.searchers[m.v];
        ++cur.searchers[m.u];
        cur.sliding_edge = g.edge_index(m.v, m.u);
        break;
    }
    VertexSet guarded;
    for (int v = 0; v < n; ++v)
      if (cur.searchers[v] > 0) guarded.set(v);
    EdgeSet fresh = g.no_edges();
    for (int e = 0; e < g.edge_count(); ++e)
      if (guarded.test(g.edge(e).u) && guarded.test(g.edge(e).v)) fresh.insert(e);
    if (cur.sliding_edge >= 0) fresh.insert(cur.sliding_edge);
    cur.newly_cleaned = fresh - prev.clean;
    cur.pre_closure = prev.clean | fresh;
    cur.clean = recontamination_closure(g, cur.pre_closure, guarded);
    cur.recontaminated = cur.clean != cur.pre_closure;
    t.steps.push_back(std::move(cur));
  }
  return t;
}

int width(const Trace& t) {
  int w = 0;
  for (const auto& s : t.steps) w = std::max(w, s.searcher_count());
  return w;
}

bool is_complete(const Trace& t) {
  const EdgeSet all = t.graph.all_edges();
  for (const auto& s : t.steps)
    if (s.clean == all) return true;
  return false;
}

bool is_monotone(const Trace& t) {
  for (const auto& s : t.steps)
    if (s.recontaminated) return false;
  return true;
}

bool is_connected(const Trace& t) {
  for (const auto& s : t.steps)
    if (!edges_connected(t.graph, s.clean)) return false;
  return true;
}

bool is_rooted_complete(const Enhancement& h, const Trace& t) {
  if (!(t.graph == h.host)) return false;
  const EdgeSet region = h.start_region();
  const EdgeSet goal = h.goal();
  const VertexSet entry_guard = boundary(h.host, h.e_in);
  bool started = h.e_in.empty();
  bool finished = false;
  for (const auto& s : t.steps) {
    if (s.clean.intersects(h.e_out)) return false;
    if (!started) {
      if (!s.clean.subset_of(region)) return false;
      VertexSet occupied;
      for (int v = 0; v < static_cast<int>(s.searchers.size()); ++v)
        if (s.searchers[v] > 0) occupied.set(v);
      started = h.e_in.subset_of(s.clean) && entry_guard.subset_of(occupied);
    }
    if (started && s.clean == goal) finished = true;
  }
  return started && finished;
}

}  // namespace gso

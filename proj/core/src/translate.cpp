#include <algorithm>
#include <map>

#include "gso/expansion.hpp"

namespace gso {

namespace {

void require_monotone_connected(const Enhancement& h, const Expansion& ex) {
  ExpansionCheck c = check_expansion(h, ex);
  if (!c.valid) throw InvalidExpansion("invalid expansion: " + c.violation);
  if (!c.monotone) throw InvalidExpansion("expansion is not monotone");
  if (!c.connected) throw InvalidExpansion("expansion is not connected");
}

// Reorders host edges so that, before each edge reaching a new vertex, every later edge
// with both ends already covered comes first.
std::vector<int> normalise(const Graph& host, VertexSet covered, std::vector<int> seq) {
  std::vector<int> out;
  std::vector<bool> taken(seq.size(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (taken[i]) continue;
    const Edge& e = host.edge(seq[i]);
    if (!covered.test(e.u) || !covered.test(e.v)) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (taken[j]) continue;
        const Edge& f = host.edge(seq[j]);
        if (covered.test(f.u) && covered.test(f.v)) {
          out.push_back(seq[j]);
          taken[j] = true;
        }
      }
    }
    out.push_back(seq[i]);
    taken[i] = true;
    covered.set(e.u);
    covered.set(e.v);
  }
  return out;
}

}  // namespace

std::vector<Move> expansion_to_strategy(const RootedGraph& rg, const Expansion& ex) {
  const Enhancement h = enhance(rg);
  require_monotone_connected(h, ex);
  const Graph& host = h.host;
  std::vector<int> seq;
  for (int be : expansion_order(h, ex)) seq.push_back(h.host_edge_of_base[be]);

  VertexSet covered = covered_vertices(host, h.e_in);
  seq = normalise(host, covered, std::move(seq));

  std::vector<Move> moves;
  VertexSet guarded;
  EdgeSet clean = h.e_in;
  const std::vector<int> in_roots = rg.s_in.members();
  for (std::size_t i = 0; i < in_roots.size(); ++i) moves.push_back(Move::place(h.u_in));
  for (int s : in_roots) {
    moves.push_back(Move::slide(h.u_in, s));
    guarded.set(s);
  }

  auto drop_idle = [&] {
    const VertexSet bd = boundary(host, clean);
    (guarded - bd).for_each([&](int w) {
      moves.push_back(Move::remove(w));
      guarded.reset(w);
    });
  };

  for (int e : seq) {
    const Edge& ed = host.edge(e);
    const bool has_u = covered.test(ed.u), has_v = covered.test(ed.v);
    EdgeSet after = clean;
    after.insert(e);
    if (has_u && has_v) {
      clean = after;
      continue;
    }
    if (has_u || has_v) {
      const int from = has_u ? ed.u : ed.v;
      const int to = has_u ? ed.v : ed.u;
      drop_idle();
      if (boundary(host, after).test(from)) {
        moves.push_back(Move::place(to));
      } else {
        moves.push_back(Move::slide(from, to));
        guarded.reset(from);
      }
      guarded.set(to);
      covered.set(to);
    } else {
      // Only the first edge of a search without in-roots.
      int start = host.degree(ed.v) == 1 && host.degree(ed.u) != 1 ? ed.v : ed.u;
      int other = start == ed.u ? ed.v : ed.u;
      moves.push_back(Move::place(start));
      if (boundary(host, after).test(start)) {
        moves.push_back(Move::place(other));
        guarded.set(start);
      } else {
        moves.push_back(Move::slide(start, other));
      }
      guarded.set(other);
      covered.set(start);
      covered.set(other);
    }
    clean = after;
  }
  return moves;
}

Expansion strategy_to_expansion(const RootedGraph& rg, const Trace& t) {
  const Enhancement h = enhance(rg);
  const bool plain = rg.s_in.none() && rg.s_out.none() && t.graph == rg.graph;
  if (!plain && !(t.graph == h.host))
    throw InvalidExpansion("trace is not played on the enhanced graph");
  if (!is_monotone(t)) throw InvalidExpansion("trace is not monotone");
  if (!is_connected(t)) throw InvalidExpansion("trace is not connected");
  if (plain ? !is_complete(t) : !is_rooted_complete(h, t))
    throw InvalidExpansion("trace is not complete");

  std::vector<int> order;
  for (std::size_t i = 1; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    if (s.sliding_edge >= 0 && s.newly_cleaned.contains(s.sliding_edge)) order.push_back(s.sliding_edge);
    s.newly_cleaned.for_each([&](int e) {
      if (e != s.sliding_edge) order.push_back(e);
    });
  }
  std::stable_partition(order.begin(), order.end(), [&](int e) { return h.e_in.contains(e); });
  Expansion ex;
  EdgeSet a = h.e_in;
  ex.sets.push_back(a);
  const EdgeSet goal = h.goal();
  for (int e : order) {
    if (a.contains(e) || !goal.contains(e)) continue;
    a.insert(e);
    ex.sets.push_back(a);
    if (a == goal) break;
  }
  return ex;
}

Expansion strategy_to_expansion(const Trace& t) {
  return strategy_to_expansion(RootedGraph(t.graph), t);
}

Expansion shrink_roots(const RootedGraph& rg, const Expansion& ex, const VertexSet& s1_in,
                       const VertexSet& s1_out) {
  if (!s1_in.subset_of(rg.s_in) || !s1_out.subset_of(rg.s_out))
    throw InvalidExpansion("shrink_roots: new roots must be subsets of the old ones");
  const Graph& g = rg.graph;
  const Enhancement h = enhance(rg);
  const std::vector<int> original = expansion_order(h, ex);

  std::vector<int> order;
  std::vector<bool> used(g.edge_count(), false);
  if (rg.s_in.any()) {
    std::vector<int> queue = s1_in.any() ? s1_in.members() : std::vector<int>{rg.s_in.first()};
    VertexSet seen;
    for (int v : queue) seen.set(v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      (g.neighbours(x) & rg.s_in).for_each([&](int y) {
        int e = g.edge_index(x, y);
        if (used[e]) return;
        used[e] = true;
        order.push_back(e);
        if (!seen.test(y)) {
          seen.set(y);
          queue.push_back(y);
        }
      });
    }
  }
  for (int e : original)
    if (!used[e]) {
      used[e] = true;
      order.push_back(e);
    }
  return expansion_from_order(enhance(g, s1_in, s1_out), order);
}

GluedExpansion glue_expansions(const std::vector<GluePart>& parts,
                               const std::vector<Expansion>& expansions) {
  if (parts.size() != expansions.size())
    throw InvalidExpansion("glue_expansions: one expansion per part required");
  GluedExpansion out;
  out.glued = glue(parts);
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(out.glued.names.size()); ++i) local[out.glued.names[i]] = i;
  const Graph& g = out.glued.rooted.graph;
  std::vector<bool> used(g.edge_count(), false);
  std::vector<int> order;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Graph& pg = parts[p].rooted.graph;
    for (int be : expansion_order(enhance(parts[p].rooted), expansions[p])) {
      const Edge& e = pg.edge(be);
      int ge = g.edge_index(local[parts[p].names[e.u]], local[parts[p].names[e.v]]);
      if (!used[ge]) {
        used[ge] = true;
        order.push_back(ge);
      }
    }
  }
  out.expansion = expansion_from_order(enhance(out.glued.rooted), order);
  return out;
}

}  // namespace gso

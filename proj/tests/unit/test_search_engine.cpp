#include <random>

#include "doctest.h"
#include "gso/canonical.hpp"
#include "gso/expansion.hpp"
#include "gso/io.hpp"
#include "gso/obstruction.hpp"
#include "gso/search.hpp"
#include "gso/solvers.hpp"
#include "oracles.hpp"

using namespace gso;
using oracle::random_connected;
using oracle::vs;

namespace {

EdgeSet edges_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet s(g.edge_count());
  for (auto [u, v] : pairs) s.insert(g.edge_index(u, v));
  return s;
}

// Minimum cost over all connected monotone expansions, by trying every base edge order.
int brute_cmp(const RootedGraph& rg) {
  const Enhancement h = enhance(rg);
  std::vector<int> order(rg.graph.edge_count());
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    const Expansion ex = expansion_from_order(h, order);
    if (!check_expansion(h, ex).connected) continue;
    best = std::min(best, expansion_cost(h, ex));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Random connected in-root (possibly empty) and random out-root.
RootedGraph random_rooted(std::mt19937_64& rng, const Graph& g) {
  const int n = g.vertex_count();
  VertexSet in;
  if (rng() % 3) {
    in.set(static_cast<int>(rng() % n));
    const int target = 1 + static_cast<int>(rng() % n);
    while (in.count() < target) {
      VertexSet frontier;
      in.for_each([&](int v) { frontier |= g.neighbours(v); });
      frontier.remove(in);
      const auto opts = frontier.members();
      if (opts.empty()) break;
      in.set(opts[rng() % opts.size()]);
    }
  }
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (rng() % 4 == 0) out.set(v);
  return RootedGraph(g, in, out);
}

}  // namespace

TEST_CASE("simulate K3 with a slide") {
  const Graph k3 = complete_graph(3);
  const Trace t = simulate(k3, {Move::place(0), Move::place(1), Move::slide(0, 2)});
  REQUIRE(t.steps.size() == 4);
  CHECK(t.steps[0].clean.empty());
  CHECK(t.steps[1].clean.empty());
  CHECK(t.steps[2].clean == edges_of(k3, {{0, 1}}));
  CHECK(t.steps[3].clean == k3.all_edges());
  CHECK(t.steps[3].sliding_edge == k3.edge_index(0, 2));
  CHECK(is_complete(t));
  CHECK(is_monotone(t));
  CHECK(is_connected(t));
  CHECK(width(t) == 2);
}

TEST_CASE("simulate recontamination on P3") {
  const Graph p3 = path_graph(3);
  const Trace t = simulate(p3, {Move::place(0), Move::slide(0, 1), Move::remove(1)});
  REQUIRE(t.steps.size() == 4);
  CHECK(t.steps[2].clean == edges_of(p3, {{0, 1}}));
  CHECK(t.steps[3].clean.empty());
  CHECK(t.steps[3].recontaminated);
  CHECK_FALSE(is_monotone(t));
}

TEST_CASE("simulate empty move list") {
  const Trace t = simulate(path_graph(2), {});
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].clean.empty());
  CHECK(width(t) == 0);
  CHECK_FALSE(is_complete(t));
  CHECK(is_complete(simulate(Graph(1), {})));
}

TEST_CASE("simulate rejects ill-formed moves") {
  try {
    simulate(path_graph(3), {Move::place(0), Move::remove(2)});
    FAIL("expected MoveError");
  } catch (const MoveError& e) {
    CHECK(e.step() == 2);
  }
  CHECK_THROWS_AS(simulate(path_graph(3), {Move::place(0), Move::slide(0, 2)}), MoveError);
  CHECK_THROWS_AS(simulate(path_graph(3), {Move::slide(0, 1)}), MoveError);
  CHECK_THROWS_AS(simulate(path_graph(3), {Move::place(5)}), MoveError);
}

TEST_CASE("closure equals the brute-force fixpoint") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 1000; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 9), 30);
    EdgeSet q(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
      if (rng() % 3) q.insert(e);
    VertexSet guarded;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3 == 0) guarded.set(v);
    CHECK(recontamination_closure(g, q, guarded) == oracle::fixpoint_closure(g, q, guarded));
  }
}

TEST_CASE("expansion_cost examples") {
  const RootedGraph p2(path_graph(2));
  const Enhancement hp = enhance(p2);
  const Expansion isolated{{hp.host.no_edges(), hp.host.all_edges()}};
  CHECK(expansion_cost(hp, isolated) == 1);

  const Graph star = star_graph(3);
  const Enhancement hs = enhance(RootedGraph(star));
  const Expansion prefix = expansion_from_order(
      hs, {star.edge_index(0, 1), star.edge_index(0, 2), star.edge_index(0, 3)});
  CHECK(expansion_cost(hs, prefix) == 2);

  const Enhancement bare = enhance(RootedGraph(Graph(1)));
  CHECK(expansion_cost(bare, Expansion{{bare.e_in}}) == 0);
  // The final position is charged, so a lone isolated in-edge costs one searcher.
  const Enhancement rooted = enhance(RootedGraph(Graph(1), vs({0}), {}));
  CHECK(expansion_cost(rooted, Expansion{{rooted.e_in}}) == 1);
  CHECK(game_value(Graph(1), vs({0}), {}, {true, true}).value == 1);
}

TEST_CASE("expansion_cost rejects invalid expansions") {
  const Enhancement h = enhance(RootedGraph(path_graph(3)));
  const Expansion jump{{h.host.no_edges(), h.host.all_edges()}};
  CHECK_FALSE(check_expansion(h, jump).valid);
  CHECK_FALSE(check_expansion(h, jump).violation.empty());
  CHECK_THROWS_AS(expansion_cost(h, jump), InvalidExpansion);
  const Expansion unfinished{{h.host.no_edges()}};
  CHECK_THROWS_AS(expansion_cost(h, unfinished), InvalidExpansion);
}

TEST_CASE("cmp examples") {
  for (int n = 2; n <= 6; ++n) CHECK(cmp_value(RootedGraph(path_graph(n))).value == 1);
  CHECK(cmp_value(RootedGraph(complete_graph(4))).value == 3);
  CHECK(cmp_value(RootedGraph::at(complete_graph(3), 0)).value == 2);
  CHECK_FALSE(cmp_decide(RootedGraph(complete_graph(4)), 2).yes());
  CHECK(cmp_decide(RootedGraph(complete_graph(4)), 3).yes());
  CHECK_THROWS(cmp_value(RootedGraph(path_graph(3), vs({0, 2}), {})));
}

TEST_CASE("K4 witness has width 3 in the simulator") {
  const RootedGraph k4(complete_graph(4));
  const SolveResult r = cmp_value(k4);
  REQUIRE(r.expansion.has_value());
  const Enhancement h = enhance(k4);
  const Trace t = simulate(h.host, expansion_to_strategy(k4, *r.expansion));
  CHECK(width(t) == 3);
  CHECK(is_rooted_complete(h, t));
  CHECK(is_monotone(t));
  CHECK(is_connected(t));
}

TEST_CASE("cmp agrees with brute force over edge orders") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (g.edge_count() > 7) continue;
      const RootedGraph rg(g);
      CHECK(cmp_value(rg).value == brute_cmp(rg));
    }
  }
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 4), 25);
    if (g.edge_count() > 7) continue;
    const RootedGraph rg = random_rooted(rng, g);
    CHECK(cmp_value(rg).value == brute_cmp(rg));
  }
}

TEST_CASE("mp examples") {
  for (int n = 2; n <= 6; ++n) CHECK(mp_value(RootedGraph(path_graph(n))).value == 1);
  CHECK(mp_value(RootedGraph(complete_graph(3))).value == 2);
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const RootedGraph rg(random_connected(rng, 2 + static_cast<int>(rng() % 6), 30));
    CHECK(mp_value(rg).value <= cmp_value(rg).value);
  }
}

TEST_CASE("game solver examples") {
  CHECK(cms_value(complete_graph(3)).value == 2);
  CHECK(cms_value(path_graph(4)).value == 1);
  CHECK(cmms_value(complete_graph(4)).value == 3);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int cms = cms_value(g).value;
      CHECK(cms <= cmms_value(g).value);
      CHECK(ms_value(g).value <= cms);
    }
}

TEST_CASE("game strategies replay in the simulator") {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    const SolveResult r = cmms_value(g);
    REQUIRE(r.strategy.has_value());
    const Trace t = simulate(g, *r.strategy);
    CHECK(is_complete(t));
    CHECK(is_monotone(t));
    CHECK(is_connected(t));
    CHECK(width(t) == r.value);
  }
}

TEST_CASE("game and expansion engines agree on small unrooted graphs") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      CHECK(game_value(g, {}, {}, {true, true}).value == cmp_value(RootedGraph(g)).value);
}

TEST_CASE("a slide off a pendant vertex lets the game beat cmp") {
  // Documented divergence: the searcher on vertex 1 slides away from it and cleans the
  // pendant edge together with an adjacent edge in one move.
  const Graph g = graph6_decode("E@^W");
  const VertexSet in = vs({1});
  CHECK(game_value(g, in, {}, {true, true}).value == 2);
  CHECK(cmp_value(RootedGraph(g, in, {})).value == 3);
}

TEST_CASE("rooted start needs the in-roots guarded") {
  const Graph p3 = path_graph(3);
  const VertexSet all = p3.vertices();
  CHECK(game_value(p3, all, {}, {true, true}).value == 3);
  CHECK(cmp_value(RootedGraph(p3, all, {})).value == 3);
}

TEST_CASE("expansion_to_strategy examples") {
  const RootedGraph p2(path_graph(2));
  const Enhancement h = enhance(p2);
  const std::vector<Move> moves =
      expansion_to_strategy(p2, Expansion{{h.host.no_edges(), h.host.all_edges()}});
  CHECK(moves == std::vector<Move>{Move::place(0), Move::slide(0, 1)});
  CHECK(width(simulate(h.host, moves)) == 1);

  const RootedGraph k3(complete_graph(3));
  const SolveResult r = cmp_value(k3);
  REQUIRE(r.expansion.has_value());
  const Enhancement hk = enhance(k3);
  const Trace t = simulate(hk.host, expansion_to_strategy(k3, *r.expansion));
  CHECK(width(t) == 2);
  CHECK(is_rooted_complete(hk, t));
  CHECK(is_monotone(t));
  CHECK(is_connected(t));
}

TEST_CASE("expansion_to_strategy rejects non-monotone input") {
  const RootedGraph p3(path_graph(3));
  const Enhancement h = enhance(p3);
  const EdgeSet a = EdgeSet::of(2, {0});
  const EdgeSet b = EdgeSet::of(2, {1});
  CHECK_THROWS_AS(expansion_to_strategy(p3, Expansion{{h.host.no_edges(), a, b, h.host.all_edges()}}),
                  InvalidExpansion);
}

TEST_CASE("strategy_to_expansion examples") {
  const Graph k3 = complete_graph(3);
  const Trace t = simulate(k3, {Move::place(0), Move::place(1), Move::slide(0, 2)});
  const Expansion ex = strategy_to_expansion(t);
  REQUIRE(ex.sets.size() == 4);
  CHECK(ex.sets[0].empty());
  CHECK(ex.sets[1] == edges_of(k3, {{0, 1}}));
  CHECK(ex.sets[2].size() == 2);
  CHECK(ex.sets[2].contains(k3.edge_index(0, 1)));
  CHECK(ex.sets[3] == k3.all_edges());
  CHECK(expansion_cost(enhance(RootedGraph(k3)), ex) == 2);

  const Trace slide = simulate(path_graph(2), {Move::place(0), Move::slide(0, 1)});
  const Expansion se = strategy_to_expansion(slide);
  REQUIRE(se.sets.size() == 2);
  CHECK(se.sets[0].empty());
  CHECK(se.sets[1].size() == 1);

  const Trace bad = simulate(path_graph(3), {Move::place(0), Move::slide(0, 1), Move::remove(1),
                                             Move::place(0), Move::slide(0, 1), Move::slide(1, 2)});
  CHECK_THROWS_AS(strategy_to_expansion(bad), InvalidExpansion);
}

TEST_CASE("strategy and expansion round trip keeps the cost") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 5), 30);
    const RootedGraph rg = random_rooted(rng, g);
    const SolveResult r = cmp_value(rg);
    REQUIRE(r.expansion.has_value());
    const Enhancement h = enhance(rg);
    const std::vector<Move> moves = expansion_to_strategy(rg, *r.expansion);
    const Trace t = simulate(h.host, moves);
    CHECK(is_rooted_complete(h, t));
    CHECK(width(t) <= r.value);
    const Expansion back = strategy_to_expansion(rg, t);
    CHECK(expansion_cost(h, back) == r.value);
  }
}

TEST_CASE("shrinking roots never increases cmp") {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 5), 30);
    const RootedGraph rg = random_rooted(rng, g);
    VertexSet in1;
    if (rg.s_in.any() && rng() % 2) in1 = VertexSet::single(rg.s_in.members()[rng() % rg.s_in.count()]);
    VertexSet out1;
    rg.s_out.for_each([&](int v) {
      if (rng() % 2) out1.set(v);
    });
    const SolveResult big = cmp_value(rg);
    const RootedGraph small(g, in1, out1);
    CHECK(cmp_value(small).value <= big.value);
    const Expansion shrunk = shrink_roots(rg, *big.expansion, in1, out1);
    CHECK(expansion_cost(enhance(small), shrunk) <= big.value);
  }
}

TEST_CASE("gluing never exceeds the largest part") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 150; ++rep) {
    // Two parts sharing the out-root of the first as the in-root of the second.
    const Graph a = random_connected(rng, 2 + static_cast<int>(rng() % 4), 30);
    const Graph b = random_connected(rng, 2 + static_cast<int>(rng() % 4), 30);
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    const int shared = static_cast<int>(rng() % na);
    const RootedGraph ra(a, VertexSet::single(static_cast<int>(rng() % na)), VertexSet::single(shared));
    const RootedGraph rb(b, VertexSet::single(0), VertexSet::single(static_cast<int>(rng() % nb)));
    std::vector<int> names_a(na), names_b(nb);
    std::iota(names_a.begin(), names_a.end(), 0);
    for (int v = 0; v < nb; ++v) names_b[v] = v == 0 ? shared : na + v - 1;
    const GluePart pa{ra, names_a};
    const GluePart pb{rb, names_b};
    const SolveResult ca = cmp_value(ra);
    const SolveResult cb = cmp_value(rb);
    const GluedExpansion ge = glue_expansions({pa, pb}, {*ca.expansion, *cb.expansion});
    const int bound = std::max(ca.value, cb.value);
    CHECK(cmp_value(ge.glued.rooted).value <= bound);
    CHECK(expansion_cost(enhance(ge.glued.rooted), ge.expansion) <= bound);
  }
}

TEST_CASE("search numbers are invariant under relabelling") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 5), 35);
    const Graph h = relabel(g, oracle::random_permutation(rng, g.vertex_count()));
    CHECK(cmp_value(RootedGraph(g)).value == cmp_value(RootedGraph(h)).value);
    CHECK(mp_value(g).value == mp_value(h).value);
    CHECK(cms_value(g).value == cms_value(h).value);
  }
}

TEST_CASE("budget exhaustion is reported") {
  SolveOptions tight;
  tight.node_budget = 1;
  CHECK(cmp_decide(RootedGraph(complete_graph(5)), 3, tight).verdict == Verdict::budget_exceeded);
  CHECK_THROWS_AS(cmp_value(RootedGraph(complete_graph(5)), tight), BudgetExceeded);
}

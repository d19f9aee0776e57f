#include <random>

#include "doctest.h"
#include "gso/canonical.hpp"
#include "gso/contraction.hpp"
#include "gso/obstruction.hpp"
#include "gso/solvers.hpp"
#include "oracles.hpp"

using namespace gso;
using oracle::random_connected;
using oracle::vs;

namespace {

// Tries every map V(g) -> V(h).
bool brute_contains(const Graph& h, const Graph& g, Relation rel) {
  const int nh = h.vertex_count();
  const int ng = g.vertex_count();
  if (nh > ng) return false;
  std::vector<int> phi(ng, 0);
  while (true) {
    bool ok = true;
    std::vector<VertexSet> fibre(nh);
    for (int v = 0; v < ng; ++v) fibre[phi[v]].set(v);
    for (int x = 0; x < nh && ok; ++x) ok = fibre[x].any() && is_connected(g, fibre[x]);
    for (int x = 0; x < nh && ok; ++x)
      for (int y = x + 1; y < nh && ok; ++y) {
        bool linked = false;
        fibre[x].for_each([&](int v) { linked = linked || (g.neighbours(v) & fibre[y]).any(); });
        ok = rel == Relation::minor ? (!h.adjacent(x, y) || linked) : h.adjacent(x, y) == linked;
      }
    if (ok) return true;
    int i = 0;
    while (i < ng && ++phi[i] == nh) phi[i++] = 0;
    if (i == ng) return false;
  }
}

std::vector<Graph> connected_up_to(int n) {
  std::vector<Graph> out;
  for (int m = 1; m <= n; ++m)
    for (const Graph& g : enumerate_connected_graphs(m)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("is_contraction examples") {
  const auto w = is_contraction(complete_graph(3), complete_graph(4));
  REQUIRE(w.has_value());
  CHECK(verify_witness(RootedGraph(complete_graph(3)), RootedGraph(complete_graph(4)),
                       Relation::contraction, *w));
  CHECK_FALSE(is_contraction(star_graph(3), complete_graph(4)).has_value());
  CHECK_FALSE(is_contraction(complete_bipartite(2, 3), k23_plus()).has_value());
  const auto id = is_contraction(k23_plus(), k23_plus());
  REQUIRE(id.has_value());
  CHECK(id->phi.size() == 5);
}

TEST_CASE("is_minor examples") {
  const auto w = is_minor(star_graph(3), complete_graph(4));
  REQUIRE(w.has_value());
  CHECK(verify_witness(RootedGraph(star_graph(3)), RootedGraph(complete_graph(4)), Relation::minor, *w));
  CHECK_FALSE(is_minor(complete_graph(4), complete_bipartite(2, 3)).has_value());
}

TEST_CASE("rooted contraction maps roots onto roots") {
  const RootedGraph p3(path_graph(3), vs({0}), vs({2}));
  const RootedGraph p2(path_graph(2), vs({0}), vs({1}));
  CHECK(is_contraction(p2, p3).has_value());
  CHECK_FALSE(is_contraction(rev(p2), RootedGraph(path_graph(3), vs({0}), vs({0}))).has_value());
  const RootedGraph k1 = RootedGraph::at(Graph(1), 0);
  CHECK(is_contraction(k1, p2).has_value());
}

TEST_CASE("containment agrees with the surjection oracle") {
  const std::vector<Graph> graphs = connected_up_to(5);
  for (const Graph& h : graphs)
    for (const Graph& g : graphs) {
      if (h.vertex_count() > g.vertex_count()) continue;
      const bool c = is_contraction(h, g).has_value();
      const bool m = is_minor(h, g).has_value();
      CHECK(c == brute_contains(h, g, Relation::contraction));
      CHECK(m == brute_contains(h, g, Relation::minor));
      if (c) CHECK(m);
    }
}

TEST_CASE("witnesses verify") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 6), 35);
    Graph h = g;
    const int steps = static_cast<int>(rng() % g.vertex_count());
    for (int s = 0; s < steps && h.edge_count() > 0; ++s)
      h = contract_edge(h, h.edge(static_cast<int>(rng() % h.edge_count())));
    const auto w = is_contraction(h, g);
    REQUIRE(w.has_value());
    CHECK(verify_witness(RootedGraph(h), RootedGraph(g), Relation::contraction, *w));
    CHECK(is_minor(h, g).has_value());
  }
}

TEST_CASE("contraction is reflexive and transitive") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph a = random_connected(rng, 2 + static_cast<int>(rng() % 5), 35);
    CHECK(is_contraction(a, a).has_value());
    const Graph b = contract_edge(a, a.edge(static_cast<int>(rng() % a.edge_count())));
    if (b.edge_count() == 0) continue;
    const Graph c = contract_edge(b, b.edge(static_cast<int>(rng() % b.edge_count())));
    CHECK(is_contraction(b, a).has_value());
    CHECK(is_contraction(c, b).has_value());
    CHECK(is_contraction(c, a).has_value());
  }
}

TEST_CASE("budget exceeded is distinct from no") {
  const ContainmentResult r =
      find_containment(complete_graph(5), complete_graph(9), Relation::contraction, 1);
  CHECK(r.status == SearchStatus::budget_exceeded);
  CHECK(find_containment(complete_graph(5), complete_graph(4), Relation::contraction).status ==
        SearchStatus::not_found);
}

TEST_CASE("proper_contractions examples") {
  const auto k4 = proper_contractions(complete_graph(4));
  REQUIRE(k4.size() == 1);
  CHECK(is_isomorphic(k4[0], complete_graph(3)));
  const auto p4 = proper_contractions(path_graph(4));
  REQUIRE(p4.size() == 1);
  CHECK(is_isomorphic(p4[0], path_graph(3)));
  const auto star = proper_contractions(star_graph(3));
  REQUIRE(star.size() == 1);
  CHECK(is_isomorphic(star[0], path_graph(3)));
  CHECK(proper_contractions(Graph(1)).empty());
}

TEST_CASE("contains_any examples") {
  const std::vector<Graph> o1{complete_graph(4), complete_bipartite(2, 3), k23_plus()};
  CHECK(contains_any(complete_graph(5), o1, Relation::minor));
  CHECK_FALSE(contains_any(cycle_graph(6), o1, Relation::contraction));
  CHECK_FALSE(contains_any(complete_graph(5), std::vector<Graph>{}, Relation::minor));
}

TEST_CASE("is_obstruction examples") {
  CHECK(is_obstruction(complete_graph(3), Param::cmp, 1, Relation::contraction));
  CHECK(is_obstruction(complete_graph(4), Param::cmp, 2, Relation::contraction));
  CHECK_FALSE(is_obstruction(cycle_graph(4), Param::cmp, 1, Relation::contraction));
  CHECK_FALSE(is_obstruction(path_graph(3), Param::cmp, 1, Relation::contraction));
  CHECK_THROWS(is_obstruction(complete_graph(3), Param::cmp, 1, Relation::minor));
}

TEST_CASE("single-edge minimality matches minimality over all contractions") {
  const std::vector<Graph> graphs = connected_up_to(5);
  for (int k = 1; k <= 2; ++k)
    for (const Graph& g : graphs) {
      const int value = cmp_value(RootedGraph(g)).value;
      bool minimal = value > k;
      for (const Graph& h : graphs) {
        if (!minimal) break;
        if (h.vertex_count() >= g.vertex_count() || !is_contraction(h, g)) continue;
        minimal = cmp_value(RootedGraph(h)).value <= k;
      }
      CHECK(is_obstruction(g, Param::cmp, k, Relation::contraction) == minimal);
    }
}

TEST_CASE("contraction never increases cmp or cms") {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 5), 30);
    VertexSet in = VertexSet::single(static_cast<int>(rng() % g.vertex_count()));
    VertexSet out = VertexSet::single(static_cast<int>(rng() % g.vertex_count()));
    RootedGraph rg(g, rng() % 2 ? in : VertexSet{}, out);
    const int before = cmp_value(rg).value;
    const int cms_before = cms_value(g).value;
    const RootedGraph smaller = contract_edge_rooted(rg, g.edge(static_cast<int>(rng() % g.edge_count())));
    CHECK(cmp_value(smaller).value <= before);
    CHECK(cms_value(smaller.graph).value <= cms_before);
  }
}

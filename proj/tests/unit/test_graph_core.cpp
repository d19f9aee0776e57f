#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gso/blocks.hpp"
#include "gso/canonical.hpp"
#include "gso/graph.hpp"
#include "gso/io.hpp"
#include "gso/rooted.hpp"
#include "oracles.hpp"

using namespace gso;

using oracle::random_connected;
using oracle::random_permutation;
using oracle::vs;

TEST_CASE("contract_edge examples") {
  CHECK(is_isomorphic(contract_edge(complete_graph(4), make_edge(1, 3)), complete_graph(3)));
  CHECK(contract_edge(path_graph(3), make_edge(0, 1)) == path_graph(2));
  const Graph k23p = k23_plus();
  REQUIRE(k23p.degree(0) == 4);
  REQUIRE(k23p.adjacent(0, 1));
  CHECK(is_isomorphic(contract_edge(k23p, make_edge(0, 1)), star_graph(3)));
  CHECK_THROWS_WITH_AS(contract_edge(path_graph(3), make_edge(0, 2)), doctest::Contains("no such edge"),
                       GraphError);
}

TEST_CASE("contract_edge merged vertex takes the smaller id") {
  const Graph g = Graph::from_pairs(4, {{1, 3}, {0, 3}, {2, 3}});
  const Graph c = contract_edge(g, make_edge(1, 3));
  CHECK(c.vertex_count() == 3);
  CHECK(c.adjacent(0, 1));
  CHECK(c.adjacent(1, 2));
  CHECK_FALSE(c.adjacent(0, 2));
}

TEST_CASE("contract_edge sizes on random graphs") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 8), 30);
    const Edge e = g.edge(static_cast<int>(rng() % g.edge_count()));
    const Graph c = contract_edge(g, e);
    CHECK(c.vertex_count() == g.vertex_count() - 1);
    CHECK(c.edge_count() <= g.edge_count() - 1);
    CHECK(is_connected(c));
  }
}

TEST_CASE("contract_edge_rooted examples") {
  const RootedGraph p2(path_graph(2), vs({0}), vs({1}));
  const RootedGraph one = contract_edge_rooted(p2, make_edge(0, 1));
  CHECK(one.graph.vertex_count() == 1);
  CHECK(one.s_in == vs({0}));
  CHECK(one.s_out == vs({0}));

  const RootedGraph k3 = RootedGraph::at(complete_graph(3), 0);
  const RootedGraph k3c = contract_edge_rooted(k3, make_edge(1, 2));
  CHECK(k3c.graph == path_graph(2));
  CHECK(k3c.s_in == vs({0}));
  CHECK(k3c.s_out == vs({0}));

  const RootedGraph p3(path_graph(3), vs({0}), vs({2}));
  const RootedGraph p3c = contract_edge_rooted(p3, make_edge(0, 1));
  CHECK(p3c.graph == path_graph(2));
  CHECK(p3c.s_in == vs({0}));
  CHECK(p3c.s_out == vs({1}));
}

TEST_CASE("enhance examples") {
  const Enhancement h = enhance(RootedGraph(path_graph(2), vs({0}), vs({1})));
  CHECK(h.host.vertex_count() == 4);
  CHECK(h.host.neighbours(h.u_in) == vs({0}));
  CHECK(h.host.neighbours(h.u_out) == vs({1}));
  CHECK(h.e_in.size() == 1);
  CHECK(h.e_out.size() == 1);

  const Enhancement bare = enhance(RootedGraph(complete_graph(3)));
  CHECK(bare.host.degree(bare.u_in) == 0);
  CHECK(bare.host.degree(bare.u_out) == 0);
  CHECK(bare.e_in.empty());
  CHECK(bare.e_out.empty());
  CHECK(drop_isolated(bare.host) == complete_graph(3));

  const Enhancement k3 = enhance(RootedGraph::at(complete_graph(3), 2));
  CHECK(k3.host.neighbours(k3.u_in) == vs({2}));
  CHECK(k3.host.neighbours(k3.u_out) == vs({2}));
  CHECK(induced_subgraph(k3.host, VertexSet::prefix(3)) == complete_graph(3));
}

TEST_CASE("glue examples") {
  const GluePart ab{RootedGraph(path_graph(2), vs({0}), vs({1})), {10, 11}};
  const GluePart bc{RootedGraph(path_graph(2), vs({0}), vs({1})), {11, 12}};
  const GluePart abc = glue({ab, bc});
  CHECK(abc.rooted.graph.vertex_count() == 3);
  CHECK(is_isomorphic(abc.rooted.graph, path_graph(3)));
  REQUIRE(abc.names.size() == 3);
  const auto local = [&](int name) {
    return static_cast<int>(std::find(abc.names.begin(), abc.names.end(), name) - abc.names.begin());
  };
  CHECK(abc.rooted.s_in == vs({local(10)}));
  CHECK(abc.rooted.s_out == vs({local(12)}));

  const GluePart single = glue({ab});
  CHECK(single.rooted == ab.rooted);

  const GluePart wrong{RootedGraph(path_graph(2), vs({0}), vs({1})), {10, 13}};
  CHECK_THROWS_WITH(glue({ab, wrong}), doctest::Contains("glue precondition"));
}

TEST_CASE("rev examples") {
  const RootedGraph x(path_graph(4), vs({0, 1}), vs({3}));
  CHECK(rev(rev(x)) == x);
  const RootedGraph y(path_graph(3), {}, vs({1}));
  CHECK(rev(y) == RootedGraph(path_graph(3), vs({1}), {}));
  const RootedGraph z = RootedGraph::at(cycle_graph(5), 2);
  CHECK(rev(z) == z);
}

TEST_CASE("boundary examples") {
  const Graph p3 = path_graph(3);
  CHECK(boundary(p3, p3.all_edges()).none());
  CHECK(boundary(p3, EdgeSet::of(2, {p3.edge_index(0, 1)})) == vs({1}));
  const Graph k3 = complete_graph(3);
  CHECK(boundary(k3, EdgeSet::of(3, {k3.edge_index(0, 1)})) == vs({0, 1}));
}

TEST_CASE("boundary of a set equals boundary of its complement") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 9), 35);
    EdgeSet f(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
      if (rng() & 1) f.insert(e);
    CHECK(boundary(g, f) == boundary(g, g.all_edges() - f));
  }
}

TEST_CASE("blocks_and_cuts examples") {
  const BlockDecomposition p3 = blocks_and_cuts(path_graph(3));
  REQUIRE(p3.blocks.size() == 2);
  CHECK(p3.blocks[0].cls == BlockClass::hair);
  CHECK(p3.blocks[1].cls == BlockClass::hair);
  CHECK(p3.cut_vertices == vs({1}));

  const BlockDecomposition tp = blocks_and_cuts(oracle::triangle_with_pendant());
  REQUIRE(tp.blocks.size() == 2);
  std::multiset<BlockClass> classes;
  for (const Block& b : tp.blocks) classes.insert(b.cls);
  CHECK(classes == std::multiset<BlockClass>{BlockClass::hair, BlockClass::cycle});
  CHECK(tp.cut_vertices == vs({2}));
  CHECK(tp.is_light(2));

  // Not outerplanar, so no face data (see the faces test below for haploid faces).
  const BlockDecomposition k = blocks_and_cuts(k23_plus());
  REQUIRE(k.blocks.size() == 1);
  CHECK(k.blocks[0].cls == BlockClass::essential);
  CHECK(k.cut_vertices.none());
  CHECK_FALSE(k.blocks[0].embedding.has_value());

  CHECK_THROWS_AS(blocks_and_cuts(Graph(3)), GraphError);
}

TEST_CASE("outerplanar faces of the diamond") {
  const BlockDecomposition d = blocks_and_cuts(oracle::diamond());
  REQUIRE(d.blocks.size() == 1);
  const Block& b = d.blocks[0];
  CHECK(b.cls == BlockClass::essential);
  REQUIRE(b.embedding.has_value());
  CHECK(b.embedding->cycle.size() == 4);
  CHECK(b.embedding->chords.size() == 1);
  REQUIRE(b.embedding->faces.size() == 2);
  for (const Face& f : b.embedding->faces) {
    CHECK(f.vertices.size() == 3);
    CHECK(f.haploid);
  }
}

TEST_CASE("blocks partition the edges") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_connected(rng, 2 + static_cast<int>(rng() % 10), 20);
    const BlockDecomposition d = blocks_and_cuts(g);
    std::vector<int> seen(g.edge_count(), 0);
    std::vector<int> blocks_at(g.vertex_count(), 0);
    for (const Block& b : d.blocks) {
      for (int e : b.edges) ++seen[e];
      b.vertices.for_each([&](int v) { ++blocks_at[v]; });
    }
    for (int e = 0; e < g.edge_count(); ++e) CHECK(seen[e] == 1);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(d.cut_vertices.test(v) == (blocks_at[v] >= 2));
  }
}

TEST_CASE("is_outerplanar examples") {
  CHECK_FALSE(is_outerplanar(complete_graph(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(cycle_graph(5)));
}

TEST_CASE("is_outerplanar agrees with the circle embedding oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      if (!is_connected(g)) continue;
      if (is_outerplanar(g) != oracle::circle_embeddable(g)) FAIL_CHECK(to_string(g));
    }
  }
}

TEST_CASE("is_outerplanar agrees with the oracle on random 7-vertex graphs") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 400; ++rep) {
    const Graph g = random_connected(rng, 7, 15 + static_cast<int>(rng() % 30));
    CHECK(is_outerplanar(g) == oracle::circle_embeddable(g));
  }
}

TEST_CASE("canonical form examples") {
  const Graph p4 = path_graph(4);
  CHECK(canonical_form(p4) == canonical_form(relabel(p4, {2, 0, 3, 1})));
  CHECK_FALSE(canonical_form(star_graph(3)) == canonical_form(p4));

  std::set<std::string> certs;
  for (const Graph& g : oracle::all_labelled_graphs(4))
    if (is_connected(g)) certs.insert(canonical_form(g).certificate);
  CHECK(certs.size() == 6);
}

TEST_CASE("canonical form matches brute-force isomorphism classes") {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, std::string> by_cert, by_brute;
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      const std::string cert = canonical_form(g).certificate;
      const std::string brute = oracle::brute_canonical(g);
      auto [a, fresh_a] = by_cert.emplace(cert, brute);
      auto [b, fresh_b] = by_brute.emplace(brute, cert);
      CHECK(a->second == brute);
      CHECK(b->second == cert);
    }
    CHECK(by_cert.size() == by_brute.size());
  }
}

TEST_CASE("canonical form is invariant under relabelling and complete at n=7") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = random_connected(rng, 7, 30);
    const Graph h = relabel(g, random_permutation(rng, 7));
    CHECK(canonical_form(g) == canonical_form(h));
    const Graph other = random_connected(rng, 7, 30);
    CHECK(is_isomorphic(g, other) == oracle::brute_isomorphic(g, other));
  }
}

TEST_CASE("rooted canonical form respects roots") {
  const RootedGraph a(path_graph(3), vs({0}), {});
  const RootedGraph b(path_graph(3), vs({2}), {});
  const RootedGraph c(path_graph(3), vs({1}), {});
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(a, c));
  CHECK_FALSE(is_isomorphic(a, rev(a)));
}

TEST_CASE("graph6 examples") {
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(path_graph(2)) == "A_");
  CHECK(graph6_decode("C~") == complete_graph(4));
  CHECK(graph6_decode("@") == Graph(1));
  CHECK(graph6_decode("A_") == path_graph(2));
}

TEST_CASE("graph6 errors carry an offset") {
  try {
    graph6_decode("C~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    graph6_decode("C!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 70);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 10 == 0) edges.push_back(make_edge(u, v));
    const Graph g(n, edges);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("rooted JSON lines round trip") {
  const RootedGraph rg(cycle_graph(5), vs({0, 1}), vs({3}));
  const NamedRootedGraph back = rooted_from_json_line(rooted_to_json_line(rg, "c5"));
  CHECK(back.rooted == rg);
  CHECK(back.name == "c5");

  std::istringstream in("# comment\nC~\n" + rooted_to_json_line(rg) + "\n");
  const auto fam = read_family(in);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].rooted.graph == complete_graph(4));
  CHECK(fam[1].rooted == rg);
}

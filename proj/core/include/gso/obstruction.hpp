#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gso/contraction.hpp"
#include "gso/graph.hpp"
#include "gso/rooted.hpp"
#include "gso/solvers.hpp"

namespace gso {

using BigInt = boost::multiprecision::cpp_int;

// ---- obstruction predicate

// param(g) > k and every single-edge contraction has param <= k. For the minor relation
// every single-edge deletion (isolated vertices dropped) must also have param <= k; the
// minor relation is accepted for mp and ms only. Throws BudgetExceeded.
bool is_obstruction(const Graph& g, Param p, int k, Relation rel, const SolveOptions& opts = {});

// ---- enumeration

// One canonical representative per isomorphism class of connected graphs on n vertices,
// sorted by certificate.
std::vector<Graph> enumerate_connected_graphs(int n);
// Index i holds the graphs on i vertices (index 0 is empty).
std::vector<std::vector<Graph>> enumerate_connected_graphs_up_to(int n_max);

// ---- mining

struct MineOptions {
  int n_max = 6;
  Param param = Param::cmp;
  int k = 1;
  Relation relation = Relation::contraction;
  SolveOptions solve;
  // Graphs to examine instead of generating them (any order; disconnected ones are skipped).
  const std::vector<Graph>* corpus = nullptr;
};

struct MineResult {
  std::vector<Graph> obstructions;         // by vertex count, then certificate
  std::vector<std::size_t> examined;       // per vertex count
  std::vector<std::size_t> pruned;         // per vertex count: contain a smaller obstruction
  std::vector<std::size_t> budget_failures;  // per vertex count
  int complete_up_to = 0;                  // largest n with every graph decided
};

MineResult mine_obstructions(const MineOptions& opts);

// ---- gluing at roots

// The single vertex carrying the roots of a doubly or singly rooted member; throws
// std::invalid_argument otherwise.
int root_vertex(const RootedGraph& rg);

// One graph per size-m multiset of members with all roots identified, deduplicated by
// canonical form, in first-seen order.
std::vector<Graph> glue_family_at_root(const std::vector<RootedGraph>& family, int m);

// ---- fans

// Outerplanar and every component of g - v is a path with an endpoint adjacent to v.
bool fan_check_structural(const Graph& g, int v);
// cmp(g, {v}, {v}) <= 2.
bool fan_check_solver(const Graph& g, int v, const SolveOptions& opts = {});

struct FanBaseResult {
  std::vector<RootedGraph> members;     // by vertex count, then rooted certificate
  std::vector<std::size_t> non_fans;    // per vertex count: doubly rooted outerplanar non-fans
};

// Doubly rooted outerplanar graphs on at most n_max vertices that fail fan_check_solver
// while all their single-edge rooted contractions pass it.
FanBaseResult mine_fan_base(int n_max, const SolveOptions& opts = {});

// ---- branches

struct Branch {
  RootedGraph rooted;  // doubly rooted on root
  int root = 0;
  Edge trunk;          // at level 1: the lowest-index edge at the root
  int level = 1;
};

// Br(level) built from a base family of doubly rooted graphs, deduplicated by rooted
// canonical form.
std::vector<Branch> branch_set(int level, const std::vector<RootedGraph>& base);
// Three branches of Br(level), with repetition, glued at their roots.
std::vector<Graph> obr_set(int level, const std::vector<RootedGraph>& base);

// Counts for a base family of the given size.
BigInt branch_count(int level, const BigInt& base_size = 5);
BigInt obr_count(int level, const BigInt& base_size = 5);
// f(level) >= 2 (5/2)^(2^(level-1)) and |O_Br(level)| >= (4/3) (5/2)^(3 2^(level-1)),
// compared exactly after clearing denominators.
bool branch_bound_holds(int level);
bool obr_bound_holds(int level);

struct ObrReport {
  int level = 1;
  std::size_t branches = 0;
  std::size_t graphs = 0;
  std::size_t contractions_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// For every G in O_Br(level): cmms(G) >= level + 2 and every single-edge contraction has
// cmms = level + 1. For every branch: no trunk-first search with level searchers, a
// root-guarded search with level + 2, and trunk-first and trunk-last searches with
// level + 1. Search numbers are computed through cmp.
ObrReport verify_obr(int level, const std::vector<RootedGraph>& base, const SolveOptions& opts = {});

}  // namespace gso

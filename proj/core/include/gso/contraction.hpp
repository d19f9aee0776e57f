#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"

namespace gso {

enum class Relation { contraction, minor };

const char* to_string(Relation r);
Relation parse_relation(const std::string& s);

// phi[v] for every vertex v of the larger graph: a surjection onto the smaller one.
struct ContractionWitness {
  std::vector<int> phi;
};

enum class SearchStatus { found, not_found, budget_exceeded };

struct ContainmentResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<ContractionWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

// Searches for a surjection phi : V(g) -> V(h) with connected fibres, adjacency
// preserved (contraction: exactly; minor: edges of h realised), and root images equal.
// node_budget = 0 means unlimited.
ContainmentResult find_containment(const RootedGraph& h, const RootedGraph& g, Relation rel,
                                   std::uint64_t node_budget = 0);
// Same on plain graphs (no connectivity requirement on either side).
ContainmentResult find_containment(const Graph& h, const Graph& g, Relation rel,
                                   std::uint64_t node_budget = 0);

std::optional<ContractionWitness> is_contraction(const RootedGraph& h, const RootedGraph& g);
std::optional<ContractionWitness> is_contraction(const Graph& h, const Graph& g);
std::optional<ContractionWitness> is_minor(const Graph& h, const Graph& g);

// Checks a witness against the definition.
bool verify_witness(const RootedGraph& h, const RootedGraph& g, Relation rel,
                    const ContractionWitness& w);

// Single-edge contractions, one per isomorphism class, in first-seen edge order.
std::vector<Graph> proper_contractions(const Graph& g);

// Index of the first family member related to g, or -1. Members are checked in parallel;
// the result is the lowest matching index.
int first_contained(const RootedGraph& g, const std::vector<RootedGraph>& family, Relation rel);
bool contains_any(const RootedGraph& g, const std::vector<RootedGraph>& family, Relation rel);
bool contains_any(const Graph& g, const std::vector<Graph>& family, Relation rel);

}  // namespace gso

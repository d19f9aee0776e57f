#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"
#include "gso/search.hpp"

namespace gso {

// A sequence of edge sets of an enhanced host.
struct Expansion {
  std::vector<EdgeSet> sets;
};

class InvalidExpansion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExpansionCheck {
  bool valid = false;
  std::string violation;  // empty when valid
  bool monotone = false;  // sets nested
  bool connected = false;  // every set induces a connected subgraph
};

// Conditions: first set E_in, last set E(host) - E_out, at most one new edge per step,
// every set avoids E_out.
ExpansionCheck check_expansion(const Enhancement& h, const Expansion& ex);

// |boundary(A_i)| + q_i at every position (boundary and pendancy taken in the host).
std::vector<int> position_costs(const Enhancement& h, const Expansion& ex);
// Maximum over all positions. Throws InvalidExpansion naming the violated condition.
int expansion_cost(const Enhancement& h, const Expansion& ex);

// Monotone expansion from an order of base edges (each base edge exactly once).
Expansion expansion_from_order(const Enhancement& h, const std::vector<int>& base_edges);
// Base edge order of a monotone expansion (repeated sets skipped).
std::vector<int> expansion_order(const Enhancement& h, const Expansion& ex);

// Strategy on the enhanced host realising a monotone connected expansion; its width is
// at most the expansion cost. Throws InvalidExpansion for non-monotone or disconnected input.
std::vector<Move> expansion_to_strategy(const RootedGraph& rg, const Expansion& ex);

// Prefix expansion of a monotone, connected, complete trace played on enh(rg), or on
// rg.graph itself when rg has no roots. Throws InvalidExpansion otherwise.
Expansion strategy_to_expansion(const RootedGraph& rg, const Trace& t);
Expansion strategy_to_expansion(const Trace& t);

// Expansion of (G, S1_in, S1_out) with S1_in within S_in and S1_out within S_out, built from
// one of (G, S_in, S_out): the base edges inside S_in first, breadth-first from S1_in,
// then the original order.
Expansion shrink_roots(const RootedGraph& rg, const Expansion& ex, const VertexSet& s1_in,
                       const VertexSet& s1_out);

// Glues parts and concatenates their expansions' edge orders into an expansion of the glued
// rooted graph. Expansions must be monotone.
struct GluedExpansion {
  GluePart glued;
  Expansion expansion;
};
GluedExpansion glue_expansions(const std::vector<GluePart>& parts,
                               const std::vector<Expansion>& expansions);

}  // namespace gso

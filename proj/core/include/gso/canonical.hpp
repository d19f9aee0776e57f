#pragma once

#include <string>
#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"

namespace gso {

struct CanonicalForm {
  // Equal for two (coloured) graphs iff they are isomorphic.
  std::string certificate;
  // labelling[v] = position of vertex v in the canonical order.
  std::vector<int> labelling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.certificate == b.certificate;
  }
};

// Individualisation-refinement with automorphism pruning. Optional vertex colours
// are preserved by the isomorphisms considered.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours = {});
// Colours: 1 for in-roots, 2 for out-roots, 3 for both.
CanonicalForm canonical_form(const RootedGraph& rg);

bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const RootedGraph& a, const RootedGraph& b);

// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);
RootedGraph canonical_rooted(const RootedGraph& rg);

}  // namespace gso

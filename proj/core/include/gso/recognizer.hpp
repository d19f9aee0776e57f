#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gso/expansion.hpp"
#include "gso/graph.hpp"
#include "gso/rooted.hpp"
#include "gso/solvers.hpp"

namespace gso {

// Number of non-fan pieces C_G(v), each doubly rooted on v (fans decided by the solver).
int spine_degree(const Graph& g, int v, const SolveOptions& opts = {});

enum class BlockLabel { forward, reverse, both, unlabelable };

// "->", "<-", "<->", "none".
const char* to_string(BlockLabel l);

// forward: cmp <= 2 as rooted; reverse: cmp <= 2 with the roots swapped.
BlockLabel label_block(const RootedGraph& b_star, const SolveOptions& opts = {});

struct SpineStructure {
  std::vector<int> central_cuts;        // c_1 .. c_{r+1}
  std::vector<VertexSet> central_blocks;  // B_1 .. B_r
  VertexSet left_block, right_block;    // B_0 and B_{r+1}
  VertexSet a1, a2, a3;                 // cut-vertex classes of the spine blocks
  // B_0*, B_1*, ..., B_r*, B_{r+1}*, named by vertex ids of the input graph.
  std::vector<GluePart> extended_blocks;
  // F_1 .. F_{r+1}; a trivial fan is a single vertex.
  std::vector<GluePart> extended_fans;
};

struct SpineAnalysis {
  std::optional<SpineStructure> spine;
  std::string reason;                 // why no spine was found
  std::vector<int> spine_degrees;     // per vertex
};

// Ordered spine of a connected graph, or the reason it does not exist (vertex of
// spine-degree 3, block with three central cut-vertices, central cut-vertices not on a
// path, or no central cut-vertex).
SpineAnalysis spine_structure(const Graph& g, const SolveOptions& opts = {});

struct RecognizerResult {
  bool answer = false;          // cmms(g) <= 2
  bool fast_path = false;       // decided by the decomposition
  std::string fallback_reason;  // set when the exact solver decided
  std::optional<SpineStructure> spine;
  std::vector<BlockLabel> labels;      // per extended block
  std::optional<Expansion> certificate;  // over enh(g, {}, {}), cost <= 2
};

// Decomposition fast path with a validated glued expansion; otherwise the exact solver.
RecognizerResult decide_cmms_le_2(const Graph& g, const SolveOptions& opts = {});

}  // namespace gso

#pragma once

#include <optional>
#include <vector>

#include "gso/graph.hpp"

namespace gso {

enum class BlockClass { hair, bridge, cycle, essential };

const char* to_string(BlockClass c);

struct Face {
  std::vector<int> vertices;  // in cyclic order
  int chord_sides = 0;        // number of incident chords
  bool haploid = false;       // at most one incident chord
};

// Embedding of a 2-connected outerplanar graph: its Hamiltonian outer cycle,
// the remaining edges (chords) and the bounded faces.
struct OuterplanarEmbedding {
  std::vector<int> cycle;        // vertices in order
  std::vector<Edge> outer_edges;
  std::vector<Edge> chords;
  std::vector<Face> faces;
};

struct Block {
  VertexSet vertices;
  std::vector<int> edges;  // edge ids of the host graph
  BlockClass cls = BlockClass::bridge;
  std::vector<int> cut_vertices;
  // Present for non-trivial outerplanar blocks; vertex ids are host ids.
  std::optional<OuterplanarEmbedding> embedding;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
  VertexSet light_cut_vertices;
  std::vector<std::vector<int>> blocks_of_vertex;

  bool is_light(int c) const { return light_cut_vertices.test(c); }
  bool is_heavy(int c) const { return cut_vertices.test(c) && !light_cut_vertices.test(c); }
};

// Throws GraphError on a disconnected graph. A single vertex yields no blocks.
BlockDecomposition blocks_and_cuts(const Graph& g);

// For a 2-connected graph: the outer cycle, chords and faces if it is outerplanar.
std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g);

// No K_4 minor and no K_2,3 minor (tested block by block).
bool is_outerplanar(const Graph& g);

// Vertex sets of the components of G - x, each with x added back (the graphs C_G(x)).
std::vector<VertexSet> pieces_at(const Graph& g, int x);

}  // namespace gso

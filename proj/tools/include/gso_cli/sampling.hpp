#pragma once

#include <cstdint>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"

namespace gso::cli {

// Boost distributions give the same sequence on every platform for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return boost::random::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(int numerator = 1, int denominator = 2) { return uniform(1, denominator) <= numerator; }

  // Connected graph on n vertices: a random spanning tree plus each other pair with
  // probability density/100, randomly relabelled.
  Graph connected_graph(int n, int density = 35);
  std::vector<int> permutation(int n);
  // Empty, or a random vertex grown into a connected set.
  VertexSet connected_subset(const Graph& g, bool allow_empty = true);
  VertexSet subset(const VertexSet& of);
  RootedGraph rooted(const Graph& g);
  // Contraction of a random edge.
  RootedGraph contract_random_edge(const RootedGraph& rg);

 private:
  boost::random::mt19937_64 rng_;
};

}  // namespace gso::cli

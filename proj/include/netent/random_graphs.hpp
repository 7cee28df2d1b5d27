#pragma once

// Seeded generators used by the verification suite and the tests.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "netent/graph.hpp"

namespace netent {

using Rng = std::mt19937_64;

/// Erdos-Renyi G(n, p).
Graph random_graph(Rng& rng, int n, double p);

/// G(n, p) resampled until connected; p is raised after repeated failures.
Graph random_connected_graph(Rng& rng, int n, double p);

/// Uniformly sized, uniformly chosen part A (1 <= |A| <= n-1).
Bipartition random_bipartition(Rng& rng, int n);

/// A graph built on four blocks with complete b1-b2, b2-b3, b3-b4
/// connections and G(size, intra_p) edges inside each block. Node labels
/// are shuffled; `blocks` reports where each block ended up.
struct FourBlockGraph {
  Graph graph;
  std::array<std::vector<int>, 4> blocks;
  BlockSizes sizes;
  Bipartition partition() const;
};

FourBlockGraph random_complete_block_graph(Rng& rng, const BlockSizes& sizes, double intra_p);

}  // namespace netent

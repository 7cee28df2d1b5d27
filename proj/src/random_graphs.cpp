#include "netent/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace netent {

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  for (int attempt = 0;; ++attempt) {
    const double q = std::min(1.0, p + 0.05 * (attempt / 20));
    Graph g = random_graph(rng, n, q);
    if (g.connected()) return g;
  }
}

Bipartition random_bipartition(Rng& rng, int n) {
  std::uniform_int_distribution<int> size(1, n - 1);
  std::vector<int> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(size(rng));
  return Bipartition(n, std::move(nodes));
}

Bipartition FourBlockGraph::partition() const {
  std::vector<int> a(blocks[0]);
  a.insert(a.end(), blocks[1].begin(), blocks[1].end());
  return Bipartition(graph.size(), std::move(a));
}

FourBlockGraph random_complete_block_graph(Rng& rng, const BlockSizes& sizes, double intra_p) {
  const std::array<int, 4> count = {sizes.m1, sizes.m2, sizes.n2, sizes.n1};
  const int n = sizes.total();
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  std::array<std::vector<int>, 4> blocks;
  int next = 0;
  for (int b = 0; b < 4; ++b) {
    for (int k = 0; k < count[b]; ++k) blocks[b].push_back(label[next++]);
  }
  std::bernoulli_distribution coin(intra_p);
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < 4; ++b) {
    const auto& blk = blocks[b];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        if (coin(rng)) edges.emplace_back(blk[i], blk[j]);
      }
    }
    if (b < 3) {
      for (int i : blk) {
        for (int j : blocks[b + 1]) edges.emplace_back(i, j);
      }
    }
  }
  return {Graph(n, edges), std::move(blocks), sizes};
}

}  // namespace netent

#pragma once

#include <cmath>
#include <vector>

#include "netent/netent.hpp"

namespace netent::testing {

inline Rng seeded(std::uint64_t salt) { return Rng(0x5eed0000ULL + salt); }

// All proper subsets containing node 0 are enough to see every cut once.
inline std::vector<Bipartition> all_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> a;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) a.push_back(i);
    }
    out.emplace_back(n, a);
  }
  return out;
}

inline double entropy_direct(const Graph& g, const Bipartition& p, double coupling) {
  return entropy(potential_matrix(g, coupling), p).total;
}

}  // namespace netent::testing

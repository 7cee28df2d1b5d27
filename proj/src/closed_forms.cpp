#include "netent/closed_forms.hpp"

#include <algorithm>

namespace netent {

namespace {

// Ordering of the nodes along a path graph, starting at the lower-indexed
// endpoint; empty when the graph is not a path.
std::vector<int> path_order(const Graph& graph) {
  const int n = graph.size();
  if (static_cast<int>(graph.edges().size()) != n - 1 || !graph.connected()) return {};
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (graph.degree(i) > 2) return {};
    if (graph.degree(i) <= 1 && start < 0) start = i;
  }
  std::vector<int> order{start};
  int prev = -1;
  while (static_cast<int>(order.size()) < n) {
    const int cur = order.back();
    for (int j : graph.neighbors(cur)) {
      if (j != prev) {
        prev = cur;
        order.push_back(j);
        break;
      }
    }
  }
  return order;
}

bool same_set(std::vector<int> a, std::span<const int> b) {
  std::vector<int> bb(b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::sort(bb.begin(), bb.end());
  return a == bb;
}

// Nodes `side` induce a path that has `end` as an endpoint (or side == {end}).
// Returns the number of nodes, or 0 if the shape does not match.
int pendant_path_length(const Graph& graph, std::span<const int> side, int end) {
  std::vector<std::uint8_t> in(graph.size(), 0);
  for (int i : side) in[i] = 1;
  int inner_edges = 0;
  for (const Edge& e : graph.edges()) {
    if (in[e.u] && in[e.v]) ++inner_edges;
  }
  if (inner_edges != static_cast<int>(side.size()) - 1) return 0;
  auto inner_degree = [&](int i) {
    int k = 0;
    for (int j : graph.neighbors(i)) k += in[j];
    return k;
  };
  if (side.size() > 1 && inner_degree(end) != 1) return 0;
  // Walk from `end`; a tree where every node has inner degree <= 2 is a path.
  int prev = -1, cur = end, visited = 1;
  while (true) {
    if (inner_degree(cur) > 2) return 0;
    int next = -1;
    for (int j : graph.neighbors(cur)) {
      if (in[j] && j != prev) next = j;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
    ++visited;
  }
  return visited == static_cast<int>(side.size()) ? visited : 0;
}

}  // namespace

std::optional<ClosedFormMatch> match_closed_form(const Graph& graph, const Bipartition& partition, double g) {
  if (graph.size() != partition.size()) {
    throw InputError("bipartition does not match the graph size");
  }
  const FourBlockPartition fb = four_block_of(graph, partition);
  const BlockSizes s = fb.sizes();
  if (s.m2 == 0) {
    return ClosedFormMatch{"no_cut", 0.0, s};
  }
  if (has_complete_block_connections(graph, fb)) {
    return ClosedFormMatch{"complete_blocks", theorem1_d(s, g), s};
  }
  const int n = graph.size();
  if (n % 2 == 0) {
    const auto order = path_order(graph);
    if (!order.empty()) {
      const std::vector<int> first(order.begin(), order.begin() + n / 2);
      const std::vector<int> second(order.begin() + n / 2, order.end());
      if (same_set(first, partition.part_a()) || same_set(second, partition.part_a())) {
        return ClosedFormMatch{"path_midpoint", path_d(n / 2, g), s};
      }
    }
  }
  if (s.m2 == 1 && s.n2 == 1) {
    using B = FourBlockPartition;
    auto star_side_complete = [&](B::Block interior, B::Block boundary) {
      const int hub = fb.block(boundary)[0];
      for (int i : fb.block(interior)) {
        if (!graph.adjacent(i, hub)) return false;
      }
      return true;
    };
    const std::vector<int> a = fb.part_a();
    const std::vector<int> b = fb.part_b();
    if (star_side_complete(B::interior_a, B::boundary_a)) {
      if (const int len = pendant_path_length(graph, b, fb.block(B::boundary_b)[0]); len > 0) {
        return ClosedFormMatch{"lollipop", lollipop_d(s.m1 + 1, len, g), s};
      }
    }
    if (star_side_complete(B::interior_b, B::boundary_b)) {
      if (const int len = pendant_path_length(graph, a, fb.block(B::boundary_a)[0]); len > 0) {
        return ClosedFormMatch{"lollipop", lollipop_d(s.n1 + 1, len, g), s};
      }
    }
  }
  return std::nullopt;
}

std::optional<EntropyResult<double>> entropy_closed_form(const Graph& graph, const Bipartition& partition,
                                                        double g, LogBase base) {
  const auto match = match_closed_form(graph, partition, g);
  if (!match) return std::nullopt;
  const std::size_t length = std::min(partition.part_a().size(), partition.part_b().size());
  std::vector<double> d;
  if (match->d > 0.0) d.push_back(match->d);
  return make_result(spectrum_from_coefficients(std::move(d), length, base), base, Method::closed_form);
}

}  // namespace netent

#include "netent/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace netent {

namespace {

std::string node_str(int i) { return std::to_string(i); }

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0) * (n > 0 ? n : 0), 0),
      degree_(n > 0 ? n : 0, 0) {
  if (n <= 0) {
    throw InputError("graph must have at least one node");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("edge (" + node_str(a) + "," + node_str(b) + ") references a node outside 0.." +
                       node_str(n - 1));
    }
    if (a == b) {
      throw InputError("self-loop at node " + node_str(a));
    }
    if (a > b) std::swap(a, b);
    if (adjacent(a, b)) {
      throw InputError("duplicate edge (" + node_str(a) + "," + node_str(b) + ")");
    }
    adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
    adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
    ++degree_[a];
    ++degree_[b];
    edges_.push_back({a, b});
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Graph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

bool Graph::connected() const {
  std::vector<std::uint8_t> seen(n_, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int i = frontier.front();
    frontier.pop();
    for (int j = 0; j < n_; ++j) {
      if (adjacent(i, j) && !seen[j]) {
        seen[j] = 1;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n_;
}

Bipartition::Bipartition(int n, std::vector<int> part_a)
    : n_(n), part_a_(std::move(part_a)), side_(n > 0 ? n : 0, 0) {
  if (n < 2) {
    throw InputError("a bipartition needs at least two nodes");
  }
  if (part_a_.empty()) {
    throw InputError("part A must not be empty");
  }
  for (int i : part_a_) {
    if (i < 0 || i >= n) {
      throw InputError("part A node " + node_str(i) + " outside 0.." + node_str(n - 1));
    }
    if (side_[i]) {
      throw InputError("part A lists node " + node_str(i) + " twice");
    }
    side_[i] = 1;
  }
  if (static_cast<int>(part_a_.size()) == n) {
    throw InputError("part A must be a proper subset of the nodes");
  }
  std::sort(part_a_.begin(), part_a_.end());
  part_b_.reserve(n - part_a_.size());
  for (int i = 0; i < n; ++i) {
    if (!side_[i]) part_b_.push_back(i);
  }
}

int Bipartition::cut_edges(const Graph& graph) const {
  int cut = 0;
  for (const Edge& e : graph.edges()) {
    if (in_a(e.u) != in_a(e.v)) ++cut;
  }
  return cut;
}

FourBlockPartition FourBlockPartition::validated(const Graph& graph,
                                                 std::array<std::vector<int>, 4> blocks) {
  const int n = graph.size();
  std::vector<int> owner(n, -1);
  for (int b = 0; b < 4; ++b) {
    for (int i : blocks[b]) {
      if (i < 0 || i >= n) {
        throw InputError("block node " + node_str(i) + " outside 0.." + node_str(n - 1));
      }
      if (owner[i] != -1) {
        throw InputError("node " + node_str(i) + " appears in more than one block");
      }
      owner[i] = b;
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw InputError("four blocks do not cover every node");
  }
  for (const Edge& e : graph.edges()) {
    const int lo = std::min(owner[e.u], owner[e.v]);
    const int hi = std::max(owner[e.u], owner[e.v]);
    if (hi - lo >= 2) {
      throw InputError("edge (" + node_str(e.u) + "," + node_str(e.v) + ") joins blocks " +
                       node_str(lo + 1) + " and " + node_str(hi + 1));
    }
  }
  return FourBlockPartition(std::move(blocks));
}

BlockSizes FourBlockPartition::sizes() const {
  return {static_cast<int>(blocks_[0].size()), static_cast<int>(blocks_[1].size()),
          static_cast<int>(blocks_[2].size()), static_cast<int>(blocks_[3].size())};
}

std::vector<int> FourBlockPartition::part_a() const {
  std::vector<int> out(blocks_[0]);
  out.insert(out.end(), blocks_[1].begin(), blocks_[1].end());
  return out;
}

std::vector<int> FourBlockPartition::part_b() const {
  std::vector<int> out(blocks_[2]);
  out.insert(out.end(), blocks_[3].begin(), blocks_[3].end());
  return out;
}

FourBlockPartition four_block_of(const Graph& graph, const Bipartition& partition) {
  auto touches_other_side = [&](int i) {
    for (int j = 0; j < graph.size(); ++j) {
      if (graph.adjacent(i, j) && partition.in_a(i) != partition.in_a(j)) return true;
    }
    return false;
  };
  std::array<std::vector<int>, 4> blocks;
  for (int i : partition.part_a()) {
    blocks[touches_other_side(i) ? 1 : 0].push_back(i);
  }
  for (int i : partition.part_b()) {
    blocks[touches_other_side(i) ? 2 : 3].push_back(i);
  }
  return FourBlockPartition::validated(graph, std::move(blocks));
}

bool has_complete_block_connections(const Graph& graph, const FourBlockPartition& blocks) {
  auto complete = [&](FourBlockPartition::Block x, FourBlockPartition::Block y) {
    for (int i : blocks.block(x)) {
      for (int j : blocks.block(y)) {
        if (!graph.adjacent(i, j)) return false;
      }
    }
    return true;
  };
  using B = FourBlockPartition;
  return complete(B::interior_a, B::boundary_a) && complete(B::boundary_a, B::boundary_b) &&
         complete(B::boundary_b, B::interior_b);
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) {
    throw InputError(std::string(family) + ": " + std::string(what));
  }
}

void add_clique(EdgeList& edges, int first, int count) {
  for (int i = first; i < first + count; ++i) {
    for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
  }
}

void add_path(EdgeList& edges, int first, int count) {
  for (int i = first; i + 1 < first + count; ++i) edges.emplace_back(i, i + 1);
}

// Star with hub `hub` and leaves first..first+leaves-1.
void add_star(EdgeList& edges, int hub, int first, int leaves) {
  for (int i = first; i < first + leaves; ++i) edges.emplace_back(hub, i);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete", "needs n >= 1");
  EdgeList edges;
  add_clique(edges, 0, n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path", "needs n >= 1");
  EdgeList edges;
  add_path(edges, 0, n);
  return Graph(n, edges);
}

Graph star_graph(int n) {
  require(n >= 2, "star", "needs n >= 2 (hub plus at least one leaf)");
  EdgeList edges;
  add_star(edges, 0, 1, n - 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle", "needs n >= 3");
  EdgeList edges;
  add_path(edges, 0, n);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite", "needs both sides >= 1");
  EdgeList edges;
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) edges.emplace_back(i, j);
  }
  return Graph(a + b, edges);
}

Graph barbell_graph(int l1, int l2) {
  require(l1 >= 1 && l2 >= 1, "barbell", "needs both cliques >= 1");
  EdgeList edges;
  add_clique(edges, 0, l1);
  add_clique(edges, l1, l2);
  edges.emplace_back(l1 - 1, l1);
  return Graph(l1 + l2, edges);
}

Graph lollipop_graph(int m, int n) {
  require(m >= 1 && n >= 1, "lollipop", "needs clique size >= 1 and path length >= 1");
  EdgeList edges;
  add_clique(edges, 0, m);
  add_path(edges, m, n);
  edges.emplace_back(m - 1, m);
  return Graph(m + n, edges);
}

Graph star_coalescence_graph(int s1, int s2) {
  require(s1 >= 1 && s2 >= 1, "star_coalescence", "needs both stars >= 1 node");
  EdgeList edges;
  add_star(edges, s1 - 1, 0, s1 - 1);
  add_star(edges, s1, s1 + 1, s2 - 1);
  edges.emplace_back(s1 - 1, s1);
  return Graph(s1 + s2, edges);
}

Graph star_path_graph(int m, int n) {
  require(m >= 1 && n >= 1, "star_path", "needs star size >= 1 and path length >= 1");
  EdgeList edges;
  add_star(edges, m - 1, 0, m - 1);
  add_path(edges, m, n);
  edges.emplace_back(m - 1, m);
  return Graph(m + n, edges);
}

Graph kite_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph square_graph() { return cycle_graph(4); }

namespace {

constexpr std::array<std::string_view, 11> kFamilies = {
    "complete", "path",     "star",             "cycle",     "complete_bipartite", "barbell",
    "lollipop", "star_coalescence", "star_path", "kite",      "square"};

}  // namespace

std::span<const std::string_view> family_names() { return kFamilies; }

Graph make_family(std::string_view name, std::span<const int> params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (name == "complete") { expect(1); return complete_graph(params[0]); }
  if (name == "path") { expect(1); return path_graph(params[0]); }
  if (name == "star") { expect(1); return star_graph(params[0]); }
  if (name == "cycle") { expect(1); return cycle_graph(params[0]); }
  if (name == "complete_bipartite") { expect(2); return complete_bipartite_graph(params[0], params[1]); }
  if (name == "barbell") { expect(2); return barbell_graph(params[0], params[1]); }
  if (name == "lollipop") { expect(2); return lollipop_graph(params[0], params[1]); }
  if (name == "star_coalescence") { expect(2); return star_coalescence_graph(params[0], params[1]); }
  if (name == "star_path") { expect(2); return star_path_graph(params[0], params[1]); }
  if (name == "kite") { expect(0); return kite_graph(); }
  if (name == "square") { expect(0); return square_graph(); }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace netent

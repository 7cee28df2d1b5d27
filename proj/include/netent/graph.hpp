#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netent/errors.hpp"

namespace netent {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected unweighted graph on nodes 0..n-1.
class Graph {
 public:
  /// Throws InputError on self-loops, duplicate edges or out-of-range nodes.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  int degree(int i) const { return degree_[i]; }
  std::vector<int> neighbors(int i) const;
  bool connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
};

/// A split of the nodes into part A (given, ordered) and its complement B
/// (ascending order).
class Bipartition {
 public:
  /// Throws InputError unless part_a is a non-empty proper subset of 0..n-1
  /// without duplicates.
  Bipartition(int n, std::vector<int> part_a);

  int size() const { return n_; }
  std::span<const int> part_a() const { return part_a_; }
  std::span<const int> part_b() const { return part_b_; }
  bool in_a(int node) const { return side_[node] != 0; }
  Bipartition complement() const { return Bipartition(n_, part_b_); }
  /// Number of edges with one end in each part.
  int cut_edges(const Graph& graph) const;

 private:
  int n_;
  std::vector<int> part_a_;
  std::vector<int> part_b_;
  std::vector<std::uint8_t> side_;
};

/// Sizes (m1, m2, n2, n1) of the interior/boundary blocks of a bipartition.
struct BlockSizes {
  int m1 = 0;
  int m2 = 0;
  int n2 = 0;
  int n1 = 0;
  int total() const { return m1 + m2 + n2 + n1; }
  friend bool operator==(const BlockSizes&, const BlockSizes&) = default;
};

/// Refinement of a bipartition into four ordered blocks:
/// interior of A, boundary of A, boundary of B, interior of B.
/// No edge joins interior_a to the B side or interior_b to the A side.
class FourBlockPartition {
 public:
  enum Block { interior_a = 0, boundary_a = 1, boundary_b = 2, interior_b = 3 };

  /// Checks that the blocks partition the node set of `graph` and that no
  /// edge crosses b1-b3, b1-b4 or b2-b4. Throws InputError otherwise.
  static FourBlockPartition validated(const Graph& graph,
                                      std::array<std::vector<int>, 4> blocks);

  std::span<const int> block(Block b) const { return blocks_[b]; }
  BlockSizes sizes() const;
  /// b1 followed by b2.
  std::vector<int> part_a() const;
  /// b3 followed by b4.
  std::vector<int> part_b() const;

 private:
  explicit FourBlockPartition(std::array<std::vector<int>, 4> blocks)
      : blocks_(std::move(blocks)) {}
  std::array<std::vector<int>, 4> blocks_;
};

/// b2 = nodes of A adjacent to B, b1 = rest of A; b3/b4 likewise for B.
/// Within each block the order of the bipartition is preserved.
FourBlockPartition four_block_of(const Graph& graph, const Bipartition& partition);

/// True when the three inter-block connections b1-b2, b2-b3, b3-b4 are all
/// complete bipartite. Empty b1 or b4 count as complete.
bool has_complete_block_connections(const Graph& graph, const FourBlockPartition& blocks);

// Named families. Node layouts are fixed so that callers can name partitions:
//   complete(n)            0..n-1
//   path(n)                0-1-...-(n-1)
//   star(n)                hub 0, leaves 1..n-1
//   cycle(n)               0-1-...-(n-1)-0
//   complete_bipartite(a,b) 0..a-1 | a..a+b-1
//   barbell(l1,l2)         K_l1 on 0..l1-1, K_l2 after it, bridge (l1-1, l1)
//   lollipop(m,n)          K_m on 0..m-1, path m..m+n-1, bridge (m-1, m)
//   star_coalescence(s1,s2) star S_s1 with hub s1-1 and leaves 0..s1-2,
//                          star S_s2 with hub s1 and leaves after it, bridge between hubs
//   star_path(m,n)         star S_m with hub m-1, path m..m+n-1, bridge (m-1, m)
//   kite                   diamond: 0,1 adjacent of degree 3; 2,3 of degree 2
//   square                 4-cycle 0-1-2-3-0
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph barbell_graph(int l1, int l2);
Graph lollipop_graph(int m, int n);
Graph star_coalescence_graph(int s1, int s2);
Graph star_path_graph(int m, int n);
Graph kite_graph();
Graph square_graph();

/// Builds a family by name (see above). Throws InputError for unknown names,
/// wrong parameter counts or sizes below the family minimum.
Graph make_family(std::string_view name, std::span<const int> params);

/// Names accepted by make_family.
std::span<const std::string_view> family_names();

template <typename Scalar = double>
MatrixX<Scalar> laplacian(const Graph& graph) {
  const int n = graph.size();
  MatrixX<Scalar> lap = MatrixX<Scalar>::Zero(n, n);
  for (const Edge& e : graph.edges()) {
    lap(e.u, e.v) -= Scalar(1);
    lap(e.v, e.u) -= Scalar(1);
    lap(e.u, e.u) += Scalar(1);
    lap(e.v, e.v) += Scalar(1);
  }
  return lap;
}

/// V = I + 2 g L for coupling g >= 0.
template <typename Scalar = double>
struct PotentialMatrix {
  Scalar g{};
  MatrixX<Scalar> v;

  Eigen::Index size() const { return v.rows(); }
};

template <typename Scalar = double>
PotentialMatrix<Scalar> potential_matrix(const Graph& graph, Scalar g) {
  using std::isfinite;
  if (!(g >= Scalar(0)) || !isfinite(g)) {
    throw InputError("coupling g must be a finite non-negative number");
  }
  const int n = graph.size();
  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n) + Scalar(2) * g * laplacian<Scalar>(graph);
  return {g, std::move(v)};
}

/// Rows/columns `rows` x `cols` of a dense matrix.
template <typename Derived>
auto submatrix(const Eigen::MatrixBase<Derived>& m, std::span<const int> rows,
               std::span<const int> cols) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

}  // namespace netent

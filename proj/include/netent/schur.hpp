#pragma once

// Elimination of the interior blocks of a bipartition by generalized Schur
// complements, and the closed forms for graphs whose inter-block
// connections are complete.

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "netent/errors.hpp"
#include "netent/graph.hpp"
#include "netent/reduction.hpp"

namespace netent {

/// Two-block kernel left after eliminating b1 and b4:
///   [[V22~, V23], [V23^T, V33~]],
///   V22~ = V22 - V12^T V11^{-1} V12,  V33~ = V33 - V34 V44^{-1} V34^T.
template <typename Scalar = double>
struct ReducedSystem {
  MatrixX<Scalar> v22_tilde;
  MatrixX<Scalar> v33_tilde;
  MatrixX<Scalar> v23;
  BlockSizes sizes;
  Scalar g{};

  MatrixX<Scalar> kernel() const {
    const auto m2 = v22_tilde.rows();
    const auto n2 = v33_tilde.rows();
    MatrixX<Scalar> k(m2 + n2, m2 + n2);
    k << v22_tilde, v23, v23.transpose(), v33_tilde;
    return k;
  }
};

namespace detail {

// diag - off^T interior^{-1} off, with the inverse applied through a
// Cholesky solve. Empty interior leaves diag unchanged.
template <typename Scalar>
MatrixX<Scalar> eliminate(const MatrixX<Scalar>& diag, const MatrixX<Scalar>& off,
                          const MatrixX<Scalar>& interior, std::string_view what) {
  if (interior.rows() == 0) return diag;
  Eigen::LLT<MatrixX<Scalar>> llt(interior);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(std::string(what) + " is singular or not positive definite");
  }
  const MatrixX<Scalar> solved = llt.solve(off);
  MatrixX<Scalar> out = diag - off.transpose() * solved;
  return Scalar(0.5) * (out + out.transpose());
}

}  // namespace detail

/// Graph whose edges are the nonzero off-diagonal entries of V.
template <typename Scalar>
Graph coupling_graph(const PotentialMatrix<Scalar>& v) {
  std::vector<std::pair<int, int>> edges;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    for (Eigen::Index j = i + 1; j < v.size(); ++j) {
      if (v.v(i, j) != Scalar(0) || v.v(j, i) != Scalar(0)) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(v.size()), edges);
}

/// Eliminates b1 and b4. Throws InputError when V couples blocks that the
/// partition declares disconnected.
template <typename Scalar>
ReducedSystem<Scalar> schur_reduce(const PotentialMatrix<Scalar>& v, const FourBlockPartition& fb) {
  using B = FourBlockPartition;
  if (fb.sizes().total() != v.size()) {
    throw InputError("four-block partition does not cover the potential matrix");
  }
  const auto b1 = fb.block(B::interior_a);
  const auto b2 = fb.block(B::boundary_a);
  const auto b3 = fb.block(B::boundary_b);
  const auto b4 = fb.block(B::interior_b);
  if (!submatrix(v.v, b1, b3).isZero(Scalar(0)) || !submatrix(v.v, b1, b4).isZero(Scalar(0)) ||
      !submatrix(v.v, b2, b4).isZero(Scalar(0))) {
    throw InputError("potential matrix couples non-adjacent blocks of the four-block partition");
  }
  ReducedSystem<Scalar> r;
  r.sizes = fb.sizes();
  r.g = v.g;
  r.v22_tilde = detail::eliminate<Scalar>(submatrix(v.v, b2, b2), submatrix(v.v, b1, b2),
                                          submatrix(v.v, b1, b1), "V11");
  r.v33_tilde = detail::eliminate<Scalar>(submatrix(v.v, b3, b3), submatrix(v.v, b4, b3),
                                          submatrix(v.v, b4, b4), "V44");
  r.v23 = submatrix(v.v, b2, b3);
  return r;
}

/// Entropy through the reduced two-block system. Agrees with entropy()
/// because the elimination is a local change of coordinates on each side.
template <typename Scalar>
EntropyResult<Scalar> entropy_via_schur(const PotentialMatrix<Scalar>& v, const Bipartition& p,
                                        LogBase base = LogBase::e) {
  detail::require_matching(v, p);
  const std::size_t length = std::min(p.part_a().size(), p.part_b().size());
  const FourBlockPartition fb = four_block_of(coupling_graph(v), p);
  const BlockSizes s = fb.sizes();
  if (s.m2 == 0 || s.n2 == 0) {
    return make_result(spectrum_from_coefficients<Scalar>({}, length, base), base, Method::schur);
  }
  const ReducedSystem<Scalar> r = schur_reduce(v, fb);
  return make_result(whitened_cross_spectrum<Scalar>(r.v22_tilde, r.v23, r.v33_tilde, length, base),
                     base, Method::schur);
}

/// Single Schmidt coefficient of a graph whose b1-b2, b2-b3 and b3-b4
/// connections are complete bipartite (intra-block edges arbitrary):
///   d = 2g sqrt(m2 n2) / ( sqrt(1 + 2g(m1+n2) - 4g^2 m1 m2/(1+2g m2))
///                        * sqrt(1 + 2g(m2+n1) - 4g^2 n1 n2/(1+2g n2)) ).
template <typename Scalar>
Scalar theorem1_d(const BlockSizes& s, Scalar g) {
  using std::sqrt;
  if (s.m1 < 0 || s.n1 < 0 || s.m2 < 1 || s.n2 < 1) {
    throw InputError("theorem1_d needs m2, n2 >= 1 and m1, n1 >= 0");
  }
  if (!(g >= Scalar(0))) {
    throw InputError("coupling g must be non-negative");
  }
  const Scalar m1(s.m1), m2(s.m2), n2(s.n2), n1(s.n1);
  const Scalar four_g2 = Scalar(4) * g * g;
  const Scalar left = Scalar(1) + Scalar(2) * g * (m1 + n2) - four_g2 * m1 * m2 / (Scalar(1) + Scalar(2) * g * m2);
  const Scalar right = Scalar(1) + Scalar(2) * g * (m2 + n1) - four_g2 * n1 * n2 / (Scalar(1) + Scalar(2) * g * n2);
  return Scalar(2) * g * sqrt(m2 * n2) / (sqrt(left) * sqrt(right));
}

/// Two complete blocks (m1 = n1 = 0): d = 2g sqrt(mn) / sqrt((1+2gm)(1+2gn)).
template <typename Scalar>
Scalar corollary1_d(int m, int n, Scalar g) {
  using std::sqrt;
  if (m < 1 || n < 1) {
    throw InputError("corollary1_d needs m, n >= 1");
  }
  const Scalar sm(m), sn(n);
  return Scalar(2) * g * sqrt(sm * sn) /
         sqrt((Scalar(1) + Scalar(2) * g * sm) * (Scalar(1) + Scalar(2) * g * sn));
}

}  // namespace netent

#pragma once

// Analytic Schmidt coefficients for named families and the large-coupling
// asymptotics of the complete-block family.

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netent/errors.hpp"
#include "netent/graph.hpp"
#include "netent/reduction.hpp"
#include "netent/schur.hpp"

namespace netent {

namespace detail {

template <typename Scalar>
void require_positive_coupling(Scalar g) {
  if (!(g > Scalar(0))) {
    throw InputError("coupling g must be positive");
  }
}

}  // namespace detail

/// Q_0 = 1, Q_1 = x - 1, Q_n = x Q_{n-1} - Q_{n-2}. With x = 2 + 1/(2g) the
/// ratio Q_{n-1}/Q_n is the path continued fraction. The shifted start
/// makes Q_n = U_n(x/2) - U_{n-1}(x/2).
template <typename Scalar = double>
class ChebyshevEval {
 public:
  ChebyshevEval(Scalar x, int n_max) : x_(x) {
    if (n_max < 0) throw InputError("n_max must be >= 0");
    q_.reserve(static_cast<std::size_t>(n_max) + 1);
    q_.push_back(Scalar(1));
    if (n_max >= 1) q_.push_back(x - Scalar(1));
    for (int n = 2; n <= n_max; ++n) {
      q_.push_back(x * q_[n - 1] - q_[n - 2]);
    }
  }

  static ChebyshevEval from_coupling(Scalar g, int n_max) {
    detail::require_positive_coupling(g);
    return ChebyshevEval(Scalar(2) + Scalar(1) / (Scalar(2) * g), n_max);
  }

  Scalar x() const { return x_; }
  int n_max() const { return static_cast<int>(q_.size()) - 1; }
  Scalar operator()(int n) const { return q_.at(static_cast<std::size_t>(n)); }
  std::span<const Scalar> values() const { return q_; }

 private:
  Scalar x_;
  std::vector<Scalar> q_;
};

/// Chebyshev polynomial of the second kind, U_{-1} = 0, U_0 = 1, U_1 = 2y.
template <typename Scalar>
Scalar chebyshev_u(int n, Scalar y) {
  if (n < -1) throw InputError("chebyshev_u needs n >= -1");
  if (n == -1) return Scalar(0);
  Scalar prev(0), cur(1);
  for (int k = 1; k <= n; ++k) {
    const Scalar next = Scalar(2) * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// C(k) = 1 + 4g - 4g^2 / C(k-1), C(1) = 1 + 2g: the Schur complement of a
/// path of k nodes seen from its first node, the last node being a free end.
template <typename Scalar>
Scalar path_tail_c(int k, Scalar g) {
  if (k < 1) throw InputError("path_tail_c needs k >= 1");
  Scalar c = Scalar(1) + Scalar(2) * g;
  const Scalar diag = Scalar(1) + Scalar(4) * g;
  const Scalar off2 = Scalar(4) * g * g;
  for (int i = 2; i <= k; ++i) c = diag - off2 / c;
  return c;
}

/// Schmidt coefficient of the even path P_{2n} cut at its midpoint,
/// d = 2g / C(n), by the continued fraction.
template <typename Scalar>
Scalar path_d(int n, Scalar g) {
  if (n < 1) throw InputError("path_d needs n >= 1");
  if (!(g >= Scalar(0))) throw InputError("coupling g must be non-negative");
  return Scalar(2) * g / path_tail_c(n, g);
}

/// Same coefficient as Q_{n-1}(x) / Q_n(x), x = 2 + 1/(2g).
template <typename Scalar>
Scalar path_d_polynomial(int n, Scalar g) {
  if (n < 1) throw InputError("path_d_polynomial needs n >= 1");
  const auto q = ChebyshevEval<Scalar>::from_coupling(g, n);
  return q(n - 1) / q(n);
}

/// Same coefficient through standard U polynomials at y = 1 + 1/(4g):
///   (U_{n-1} - U_{n-2}) / (U_n - U_{n-1}).
template <typename Scalar>
Scalar path_d_chebyshev_u(int n, Scalar g) {
  if (n < 1) throw InputError("path_d_chebyshev_u needs n >= 1");
  detail::require_positive_coupling(g);
  const Scalar y = Scalar(1) + Scalar(1) / (Scalar(4) * g);
  return (chebyshev_u(n - 1, y) - chebyshev_u(n - 2, y)) / (chebyshev_u(n, y) - chebyshev_u(n - 1, y));
}

/// U_{n-1}(y) / U_n(y) at y = 1 + 1/(4g). Drops the free-end correction
/// and therefore does not equal path_d; kept to quantify that gap.
template <typename Scalar>
Scalar path_d_plain_u_ratio(int n, Scalar g) {
  if (n < 1) throw InputError("path_d_plain_u_ratio needs n >= 1");
  detail::require_positive_coupling(g);
  const Scalar y = Scalar(1) + Scalar(1) / (Scalar(4) * g);
  return chebyshev_u(n - 1, y) / chebyshev_u(n, y);
}

/// V22~ of the lollipop cut at its bridge (clique side, m >= 2):
///   1 + 2gm - 4g^2(1+2g)(m-1)/((1+2mg)(1+2g)) - 4g^2(2g)(m-1)^2/((1+2mg)(1+2g)).
template <typename Scalar>
Scalar lollipop_v22(int m, Scalar g) {
  if (m < 1) throw InputError("lollipop_v22 needs m >= 1");
  const Scalar sm(m);
  const Scalar denom = (Scalar(1) + Scalar(2) * sm * g) * (Scalar(1) + Scalar(2) * g);
  const Scalar g2 = Scalar(4) * g * g;
  return Scalar(1) + Scalar(2) * g * sm - g2 * (Scalar(1) + Scalar(2) * g) * (sm - Scalar(1)) / denom -
         g2 * (Scalar(2) * g) * (sm - Scalar(1)) * (sm - Scalar(1)) / denom;
}

/// Schmidt coefficient of lollipop(m, n) (K_m bridged to an n-node path)
/// cut at the bridge: d = 2g / (sqrt(C(n)) sqrt(V22~)).
template <typename Scalar>
Scalar lollipop_d(int m, int n, Scalar g) {
  using std::sqrt;
  if (m < 1 || n < 1) throw InputError("lollipop_d needs m >= 1 and n >= 1");
  return Scalar(2) * g / (sqrt(path_tail_c(n, g)) * sqrt(lollipop_v22(m, g)));
}

/// Star S_N with i leaves on one side and the hub plus N-i-1 leaves on the
/// other: d = 2g sqrt(i) / sqrt((1+2g)(1+2g(N-1)) - 4g^2(N-i-1)).
template <typename Scalar>
Scalar star_partition_d(int n_nodes, int leaves, Scalar g) {
  using std::sqrt;
  if (n_nodes < 2 || leaves < 1 || leaves > n_nodes - 1) {
    throw InputError("star_partition_d needs N >= 2 and 1 <= i <= N-1");
  }
  const Scalar n(n_nodes), i(leaves);
  return Scalar(2) * g * sqrt(i) /
         sqrt((Scalar(1) + Scalar(2) * g) * (Scalar(1) + Scalar(2) * g * (n - Scalar(1))) -
              Scalar(4) * g * g * (n - i - Scalar(1)));
}

/// How the small parameter of the large-coupling expansion d ~ 1 - eps/2
/// is formed.
enum class EpsilonForm {
  /// (1 + n1/n2)/(2g m2) + (1 + m1/m2)/(2g n2) = N/(2g m2 n2).
  two_term_sum,
  /// N/(4g m2 n2), which carries a constant offset in the entropy.
  collapsed,
};

template <typename Scalar>
Scalar large_coupling_epsilon(const BlockSizes& s, Scalar g, EpsilonForm form = EpsilonForm::two_term_sum) {
  detail::require_positive_coupling(g);
  if (s.m2 < 1 || s.n2 < 1) throw InputError("large-coupling estimate needs m2, n2 >= 1");
  const Scalar m1(s.m1), m2(s.m2), n2(s.n2), n1(s.n1);
  if (form == EpsilonForm::collapsed) {
    return Scalar(s.total()) / (Scalar(4) * g * m2 * n2);
  }
  return (Scalar(1) + n1 / n2) / (Scalar(2) * g * m2) + (Scalar(1) + m1 / m2) / (Scalar(2) * g * n2);
}

/// S ~ log(v/2) + 1 with v = eps^{-1/2}.
template <typename Scalar>
Scalar large_coupling_entropy(const BlockSizes& s, Scalar g, LogBase base = LogBase::e,
                              EpsilonForm form = EpsilonForm::two_term_sum) {
  using std::log;
  using std::sqrt;
  const Scalar upsilon = Scalar(1) / sqrt(large_coupling_epsilon(s, g, form));
  const Scalar nats = log(upsilon / Scalar(2)) + Scalar(1);
  return base == LogBase::e ? nats : nats / log(Scalar(2));
}

/// A recognised shape with an analytic Schmidt coefficient.
struct ClosedFormMatch {
  /// "no_cut", "complete_blocks", "path_midpoint" or "lollipop".
  std::string kind;
  /// The single nonzero coefficient (0 for no_cut).
  double d = 0.0;
  BlockSizes sizes;
};

/// Recognises shapes covered by a closed form: no cut edges, complete
/// inter-block connections, an even path cut in half, or a clique-like side
/// bridged to a path. Returns nullopt otherwise.
std::optional<ClosedFormMatch> match_closed_form(const Graph& graph, const Bipartition& partition, double g);

/// Entropy through match_closed_form, nullopt when no closed form applies.
std::optional<EntropyResult<double>> entropy_closed_form(const Graph& graph, const Bipartition& partition,
                                                        double g, LogBase base = LogBase::e);

}  // namespace netent

#pragma once

// Schmidt decomposition of the Gaussian network state psi(X) ~ exp(-X^T V X / 2)
// across a bipartition, the per-mode entropies, and an independent check
// through covariance matrices.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netent/errors.hpp"
#include "netent/graph.hpp"

namespace netent {

enum class LogBase { e, two };
enum class Method { direct, schur, closed_form, oracle };

constexpr std::string_view to_string(LogBase base) { return base == LogBase::e ? "e" : "2"; }

constexpr std::string_view to_string(Method method) {
  switch (method) {
    case Method::direct: return "direct";
    case Method::schur: return "schur";
    case Method::closed_form: return "closed_form";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

/// Numerical thresholds shared by every route to a spectrum.
struct SpectrumTolerance {
  /// Coefficients below this are exactly zero.
  static constexpr double zero = 1e-12;
  /// Coefficients in [1, 1 + clamp_band] are numerical noise and get clamped.
  static constexpr double clamp_band = 1e-9;
  static constexpr double clamp_to = 1.0 - 1e-12;
  /// Eigenvalues of V (or of a diagonal block) at or below this mean "not PD".
  static constexpr double pd_floor = 1e-12;
  /// The covariance oracle resolves nu - 1 only to about this, i.e. d to ~4e-7.
  static constexpr double oracle_nu_floor = 1e-13;
};

template <typename Scalar = double>
struct SchmidtSpectrum {
  /// Schmidt coefficients, descending, each in [0, 1).
  std::vector<Scalar> d;
  /// nu_i = (1 - d_i^2)^(-1/2).
  std::vector<Scalar> nu;
  /// Entropy carried by each mode pair, in the requested log base.
  std::vector<Scalar> mode_entropy;
  /// Clamping notices; empty in the normal case.
  std::vector<std::string> warnings;

  std::size_t size() const { return d.size(); }
  /// Number of nonzero coefficients.
  int rank() const {
    return static_cast<int>(std::count_if(d.begin(), d.end(), [](Scalar x) { return x > Scalar(0); }));
  }
  Scalar max_d() const { return d.empty() ? Scalar(0) : d.front(); }
};

template <typename Scalar = double>
struct EntropyResult {
  Scalar total{};
  SchmidtSpectrum<Scalar> spectrum;
  LogBase log_base = LogBase::e;
  Method method = Method::direct;
};

namespace detail {

template <typename Scalar>
Scalar log_in(Scalar x, LogBase base) {
  using std::log;
  return base == LogBase::e ? log(x) : log(x) / log(Scalar(2));
}

template <typename Scalar>
void require_coefficient(Scalar d) {
  using std::isfinite;
  if (!isfinite(d) || d < Scalar(0)) {
    throw DomainError("Schmidt coefficient must be a finite number >= 0");
  }
  if (d >= Scalar(1)) {
    throw DomainError("Schmidt coefficient d >= 1: the entropy diverges");
  }
}

// (nu - 1) / 2 computed without cancellation for small d.
template <typename Scalar>
Scalar half_nu_minus_one(Scalar d) {
  using std::sqrt;
  const Scalar s = sqrt((Scalar(1) - d) * (Scalar(1) + d));
  return d * d / (Scalar(2) * s * (Scalar(1) + s));
}

}  // namespace detail

/// nu = (1 - d^2)^(-1/2).
template <typename Scalar>
Scalar nu_from_d(Scalar d) {
  detail::require_coefficient(d);
  return Scalar(1) + Scalar(2) * detail::half_nu_minus_one(d);
}

/// Entropy of one mode pair with coefficient d:
///   ((nu+1)/2) log((nu+1)/2) - ((nu-1)/2) log((nu-1)/2).
/// Throws DomainError for d outside [0, 1).
template <typename Scalar>
Scalar entropy_from_d(Scalar d, LogBase base = LogBase::e) {
  using std::log;
  using std::log1p;
  detail::require_coefficient(d);
  if (d == Scalar(0)) return Scalar(0);
  const Scalar b = detail::half_nu_minus_one(d);
  if (b == Scalar(0)) return Scalar(0);
  const Scalar nats = (Scalar(1) + b) * log1p(b) - b * log(b);
  return base == LogBase::e ? nats : nats / log(Scalar(2));
}

/// Occupation probabilities p_n = (2/(nu+1)) ((nu-1)/(nu+1))^n, n = 0..n_max,
/// of one mode of the reduced state.
template <typename Scalar>
std::vector<Scalar> schmidt_probabilities(Scalar d, int n_max) {
  detail::require_coefficient(d);
  if (n_max < 0) {
    throw InputError("n_max must be >= 0");
  }
  const Scalar b = detail::half_nu_minus_one(d);
  const Scalar ratio = b / (Scalar(1) + b);
  std::vector<Scalar> p(static_cast<std::size_t>(n_max) + 1);
  Scalar term = Scalar(1) / (Scalar(1) + b);
  for (auto& x : p) {
    x = term;
    term *= ratio;
  }
  return p;
}

/// Builds a spectrum from raw singular values: sorts descending, clamps
/// values just above 1, zeroes values below the threshold and pads with
/// zeros up to `length`. Throws NumericalError for values clearly above 1.
template <typename Scalar>
SchmidtSpectrum<Scalar> spectrum_from_coefficients(std::vector<Scalar> raw, std::size_t length,
                                                   LogBase base = LogBase::e) {
  using std::abs;
  SchmidtSpectrum<Scalar> out;
  for (auto& x : raw) {
    x = abs(x);
    if (x >= Scalar(1)) {
      if (x > Scalar(1) + Scalar(SpectrumTolerance::clamp_band)) {
        throw NumericalError("Schmidt coefficient " + std::to_string(static_cast<double>(x)) +
                             " exceeds 1; the potential matrix is not positive definite");
      }
      out.warnings.push_back("clamped Schmidt coefficient " + std::to_string(static_cast<double>(x)) +
                             " to 1 - 1e-12");
      x = Scalar(SpectrumTolerance::clamp_to);
    } else if (x < Scalar(SpectrumTolerance::zero)) {
      x = Scalar(0);
    }
  }
  std::sort(raw.begin(), raw.end(), [](Scalar a, Scalar b) { return a > b; });
  raw.resize(std::max(length, raw.size()), Scalar(0));
  raw.resize(length);
  out.d = std::move(raw);
  out.nu.reserve(out.d.size());
  out.mode_entropy.reserve(out.d.size());
  for (Scalar x : out.d) {
    out.nu.push_back(nu_from_d(x));
    out.mode_entropy.push_back(entropy_from_d(x, base));
  }
  return out;
}

template <typename Scalar>
EntropyResult<Scalar> make_result(SchmidtSpectrum<Scalar> spectrum, LogBase base, Method method) {
  Scalar total(0);
  for (Scalar s : spectrum.mode_entropy) total += s;
  return {total, std::move(spectrum), base, method};
}

/// Eigen-decomposes a symmetric block, failing loudly when it is not
/// positive definite.
template <typename Scalar>
Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> positive_definite_eigen(const MatrixX<Scalar>& m,
                                                                      std::string_view what) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on " + std::string(what));
  }
  if (m.rows() > 0 && !(es.eigenvalues().minCoeff() > Scalar(SpectrumTolerance::pd_floor))) {
    throw NumericalError(std::string(what) + " is not positive definite");
  }
  return es;
}

/// Three-stage reduction of the two-block kernel [[A, B], [B^T, C]]:
/// rotate A and C to diagonal form, rescale both to the identity, and take
/// the singular values of the whitened cross block
///   B~ = D_A^{-1/2} O_A^T B O_C D_C^{-1/2}.
/// The spectrum is padded with zeros up to `length`.
template <typename Scalar>
SchmidtSpectrum<Scalar> whitened_cross_spectrum(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b,
                                                const MatrixX<Scalar>& c, std::size_t length,
                                                LogBase base = LogBase::e) {
  if (b.rows() == 0 || b.cols() == 0 || b.isZero(Scalar(0))) {
    return spectrum_from_coefficients<Scalar>({}, length, base);
  }
  const auto ea = positive_definite_eigen(a, "diagonal block A");
  const auto ec = positive_definite_eigen(c, "diagonal block C");
  const VectorX<Scalar> wa = ea.eigenvalues().cwiseSqrt().cwiseInverse();
  const VectorX<Scalar> wc = ec.eigenvalues().cwiseSqrt().cwiseInverse();
  const MatrixX<Scalar> whitened =
      wa.asDiagonal() * (ea.eigenvectors().transpose() * b * ec.eigenvectors()) * wc.asDiagonal();
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(whitened);
  const VectorX<Scalar>& sv = svd.singularValues();
  return spectrum_from_coefficients(std::vector<Scalar>(sv.data(), sv.data() + sv.size()), length, base);
}

/// Spectrum of an arbitrary symmetric positive-definite Gaussian kernel W
/// split into part_a | part_b.
template <typename Scalar>
SchmidtSpectrum<Scalar> schmidt_spectrum_of_kernel(const MatrixX<Scalar>& kernel,
                                                   std::span<const int> part_a,
                                                   std::span<const int> part_b,
                                                   LogBase base = LogBase::e) {
  return whitened_cross_spectrum<Scalar>(submatrix(kernel, part_a, part_a), submatrix(kernel, part_a, part_b),
                                         submatrix(kernel, part_b, part_b),
                                         std::min(part_a.size(), part_b.size()), base);
}

namespace detail {

template <typename Scalar>
void require_matching(const PotentialMatrix<Scalar>& v, const Bipartition& p) {
  if (v.size() != p.size()) {
    throw InputError("bipartition covers " + std::to_string(p.size()) + " nodes but V is " +
                     std::to_string(v.size()) + "x" + std::to_string(v.size()));
  }
}

}  // namespace detail

/// Schmidt spectrum of the network state across `p`, by block
/// diagonalisation, rescaling and SVD of the cross block of V.
template <typename Scalar>
SchmidtSpectrum<Scalar> schmidt_spectrum_direct(const PotentialMatrix<Scalar>& v, const Bipartition& p,
                                                LogBase base = LogBase::e) {
  detail::require_matching(v, p);
  return schmidt_spectrum_of_kernel<Scalar>(v.v, p.part_a(), p.part_b(), base);
}

/// Total entanglement entropy S = sum_i S(d_i) via the direct reduction.
template <typename Scalar>
EntropyResult<Scalar> entropy(const PotentialMatrix<Scalar>& v, const Bipartition& p,
                              LogBase base = LogBase::e) {
  return make_result(schmidt_spectrum_direct(v, p, base), base, Method::direct);
}

/// Which Gaussian the oracle builds covariances for.
enum class GaussianKernel {
  /// psi ~ exp(-X^T V X / 2): covariances gamma_x = V^{-1}/2, gamma_p = V/2.
  /// Same state as the direct reduction.
  potential,
  /// True ground state of H = (P^T P + X^T V X)/2: gamma_x = V^{-1/2}/2,
  /// gamma_p = V^{1/2}/2. Equals the direct reduction applied to V^{1/2}.
  ground_state,
};

/// V^{1/2} via symmetric eigendecomposition.
template <typename Scalar>
MatrixX<Scalar> ground_state_kernel(const PotentialMatrix<Scalar>& v) {
  const auto es = positive_definite_eigen(v.v, "potential matrix");
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

/// Entropy of part A from the symplectic eigenvalues mu_k of the reduced
/// covariance matrices, mu_k^2 = eig(gamma_x^A gamma_p^A):
///   S = sum_k (mu_k + 1/2) log(mu_k + 1/2) - (mu_k - 1/2) log(mu_k - 1/2).
/// Shares no code path with the block/SVD reduction. The reported spectrum
/// is derived through nu = 2 mu.
template <typename Scalar>
EntropyResult<Scalar> entropy_oracle(const PotentialMatrix<Scalar>& v, const Bipartition& p,
                                     LogBase base = LogBase::e,
                                     GaussianKernel kernel = GaussianKernel::potential) {
  using std::log;
  using std::sqrt;
  detail::require_matching(v, p);
  const auto es = positive_definite_eigen(v.v, "potential matrix");
  const MatrixX<Scalar>& q = es.eigenvectors();
  VectorX<Scalar> w = es.eigenvalues();
  if (kernel == GaussianKernel::ground_state) w = w.cwiseSqrt();
  const MatrixX<Scalar> gamma_x = Scalar(0.5) * q * w.cwiseInverse().asDiagonal() * q.transpose();
  const MatrixX<Scalar> gamma_p = Scalar(0.5) * q * w.asDiagonal() * q.transpose();

  const MatrixX<Scalar> gx = submatrix(gamma_x, p.part_a(), p.part_a());
  const MatrixX<Scalar> gp = submatrix(gamma_p, p.part_a(), p.part_a());
  // eig(gx gp) = eig(gp^{1/2} gx gp^{1/2}), which is symmetric.
  const auto ep = positive_definite_eigen(gp, "reduced momentum covariance");
  const MatrixX<Scalar> gp_half =
      ep.eigenvectors() * ep.eigenvalues().cwiseSqrt().asDiagonal() * ep.eigenvectors().transpose();
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> sym(gp_half * gx * gp_half, Eigen::EigenvaluesOnly);
  if (sym.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on reduced covariance product");
  }

  const Scalar half(0.5);
  std::vector<Scalar> mu;
  for (Eigen::Index k = 0; k < sym.eigenvalues().size(); ++k) {
    mu.push_back(std::max(half, sqrt(std::max(Scalar(0), sym.eigenvalues()(k)))));
  }
  std::sort(mu.begin(), mu.end(), [](Scalar a, Scalar b) { return a > b; });

  EntropyResult<Scalar> result;
  result.log_base = base;
  result.method = Method::oracle;
  const std::size_t length = std::min(p.part_a().size(), p.part_b().size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const Scalar m = mu[k];
    const Scalar s = (m + half) * log(m + half) - (m > half ? (m - half) * log(m - half) : Scalar(0));
    const Scalar s_base = base == LogBase::e ? s : s / log(Scalar(2));
    result.total += s_base;
    if (k < length) {
      const Scalar nu = Scalar(2) * m;
      // d comes back through a square root of 1 - 1/nu^2, so rounding noise in
      // nu near 1 would surface as coefficients around 1e-8; treat as zero.
      const bool noise = nu - Scalar(1) < Scalar(SpectrumTolerance::oracle_nu_floor);
      Scalar d = noise ? Scalar(0) : sqrt(std::max(Scalar(0), Scalar(1) - Scalar(1) / (nu * nu)));
      d = std::min(d, Scalar(SpectrumTolerance::clamp_to));
      result.spectrum.d.push_back(d < Scalar(SpectrumTolerance::zero) ? Scalar(0) : d);
      result.spectrum.nu.push_back(nu);
      result.spectrum.mode_entropy.push_back(s_base);
    }
  }
  return result;
}

/// mu_i with mu_i^2 = V_ii (V^{-1})_ii / 4.
template <typename Scalar>
Scalar single_node_mu(const PotentialMatrix<Scalar>& v, int node) {
  using std::sqrt;
  if (node < 0 || node >= v.size()) {
    throw InputError("node " + std::to_string(node) + " outside the network");
  }
  Eigen::LDLT<MatrixX<Scalar>> ldlt(v.v);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw NumericalError("potential matrix is not invertible");
  }
  VectorX<Scalar> unit = VectorX<Scalar>::Unit(v.size(), node);
  const Scalar inv_ii = ldlt.solve(unit)(node);
  return sqrt(v.v(node, node) * inv_ii) / Scalar(2);
}

/// Entropy between one node and the rest from the diagonal formula
/// mu^2 = V_ii (V^{-1})_ii / 4 and nu = 2 mu.
template <typename Scalar>
EntropyResult<Scalar> single_node_entropy(const PotentialMatrix<Scalar>& v, int node,
                                          LogBase base = LogBase::e) {
  using std::sqrt;
  const Scalar nu = std::max(Scalar(1), Scalar(2) * single_node_mu(v, node));
  const Scalar d = sqrt(Scalar(1) - Scalar(1) / (nu * nu));
  return make_result(spectrum_from_coefficients<Scalar>({d}, v.size() > 1 ? 1 : 0, base), base,
                     Method::closed_form);
}

}  // namespace netent

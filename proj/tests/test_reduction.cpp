#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace netent;
using doctest::Approx;

// Frozen from a 30-digit evaluation of the entropy formula at d = 1/2.
constexpr double kNuHalf = 1.154700538379251529;
constexpr double kEntropyHalfNats = 0.278238667707892540;
constexpr double kEntropyHalfBits = 0.401413546085728730;
constexpr double kGroundProbHalf = 0.928203230275509174;

TEST_CASE("mode entropy at frozen points") {
  CHECK(nu_from_d(0.5) == Approx(kNuHalf).epsilon(1e-15));
  CHECK(entropy_from_d(0.5) == Approx(kEntropyHalfNats).epsilon(1e-14));
  CHECK(entropy_from_d(0.5, LogBase::two) == Approx(kEntropyHalfBits).epsilon(1e-14));
  CHECK(entropy_from_d(0.0) == 0.0);
  CHECK(nu_from_d(0.0) == 1.0);
  CHECK_THROWS_AS(entropy_from_d(1.0), DomainError);
  CHECK_THROWS_AS(entropy_from_d(-0.1), DomainError);
}

TEST_CASE("entropy formula is stable for tiny coefficients") {
  // S ~ b(1 - log b) with b = d^2/4 as d -> 0.
  for (double d : {1e-3, 1e-5, 1e-7}) {
    const double b = d * d / 4;
    CHECK(entropy_from_d(d) == Approx(b * (1 - std::log(b))).epsilon(1e-5));
  }
}

TEST_CASE("schmidt probabilities are geometric and sum to one") {
  const auto p = schmidt_probabilities(0.5, 200);
  CHECK(p[0] == Approx(kGroundProbHalf).epsilon(1e-14));
  CHECK(std::accumulate(p.begin(), p.end(), 0.0) == Approx(1.0).epsilon(1e-14));
  const double t2 = p[1] / p[0];
  CHECK(t2 == Approx((kNuHalf - 1) / (kNuHalf + 1)).epsilon(1e-13));
  // Tail bound: P(n >= k) = t2^k.
  for (int k : {1, 3, 7}) {
    const double tail = std::accumulate(p.begin() + k, p.end(), 0.0);
    CHECK(tail == Approx(std::pow(t2, k)).epsilon(1e-12));
  }
  double s = 0;
  for (double x : p) {
    if (x > 0) s -= x * std::log(x);
  }
  CHECK(s == Approx(kEntropyHalfNats).epsilon(1e-13));
}

TEST_CASE("spectrum tolerances") {
  const auto s = spectrum_from_coefficients<double>({1e-13, 0.3, 1.0 + 1e-10}, 4);
  REQUIRE(s.size() == 4);
  CHECK(s.d[0] == 1.0 - 1e-12);
  CHECK(s.d[1] == 0.3);
  CHECK(s.d[2] == 0.0);
  CHECK(s.d[3] == 0.0);
  CHECK(s.rank() == 2);
  CHECK(s.warnings.size() == 1);
  CHECK_THROWS_AS(spectrum_from_coefficients<double>({1.01}, 1), NumericalError);
}

TEST_CASE("two coupled oscillators match the frozen value") {
  // K_2 at g = 1/2 gives d = 1/2 exactly.
  const auto v = potential_matrix(complete_graph(2), 0.5);
  const Bipartition p(2, {0});
  for (const auto& r : {entropy(v, p), entropy_via_schur(v, p), entropy_oracle(v, p)}) {
    CHECK(r.spectrum.d[0] == Approx(0.5).epsilon(1e-12));
    CHECK(r.total == Approx(kEntropyHalfNats).epsilon(1e-12));
  }
  CHECK(entropy(v, p, LogBase::two).total == Approx(kEntropyHalfBits).epsilon(1e-12));
}

TEST_CASE("no coupling, no entanglement") {
  const auto v = potential_matrix(complete_graph(5), 0.0);
  const auto r = entropy(v, Bipartition(5, {0, 1}));
  CHECK(r.total == 0.0);
  CHECK(r.spectrum.rank() == 0);
  // Disconnected parts.
  const Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(entropy(potential_matrix(two_edges, 3.0), Bipartition(4, {0, 1})).total == 0.0);
}

TEST_CASE("property: entropy is symmetric under swapping the parts") {
  auto rng = testing::seeded(10);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph graph = random_connected_graph(rng, 2 + trial % 11, 0.4);
    const Bipartition p = random_bipartition(rng, graph.size());
    const auto v = potential_matrix(graph, 0.2 + 0.3 * (trial % 7));
    CHECK(entropy(v, p).total == Approx(entropy(v, p.complement()).total).epsilon(1e-10));
  }
}

TEST_CASE("property: direct method agrees with the covariance oracle") {
  auto rng = testing::seeded(11);
  double worst = 0.0;
  for (int trial = 0; trial < 240; ++trial) {
    const Graph graph = random_connected_graph(rng, 2 + trial % 11, 0.35);
    const Bipartition p = random_bipartition(rng, graph.size());
    for (double g : {0.1, 1.0, 10.0}) {
      const auto v = potential_matrix(graph, g);
      worst = std::max(worst, std::abs(entropy(v, p).total - entropy_oracle(v, p).total));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("ground-state kernel is a different observable") {
  // The alternative kernel gives the same rank pattern but its own values.
  const auto v = potential_matrix(complete_graph(2), 0.5);
  const Bipartition p(2, {0});
  const auto alt = entropy_oracle(v, p, LogBase::e, GaussianKernel::ground_state);
  CHECK(alt.spectrum.rank() == 1);
  CHECK(alt.total > 0.0);
  CHECK(std::abs(alt.total - entropy(v, p).total) > 1e-3);
  const MatrixX<double> root = ground_state_kernel(v);
  CHECK((root * root - v.v).norm() < 1e-12);
}

TEST_CASE("property: rank never exceeds the smaller part or the cut size") {
  auto rng = testing::seeded(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph graph = random_connected_graph(rng, 2 + trial % 11, 0.3);
    const Bipartition p = random_bipartition(rng, graph.size());
    const auto r = entropy(potential_matrix(graph, 1.0), p);
    const auto fb = four_block_of(graph, p);
    const int bound = std::min(fb.sizes().m2, fb.sizes().n2);
    CHECK(r.spectrum.rank() <= bound);
    CHECK(r.spectrum.size() == std::min(p.part_a().size(), p.part_b().size()));
    CHECK(std::is_sorted(r.spectrum.d.rbegin(), r.spectrum.d.rend()));
  }
}

TEST_CASE("property: relabelling nodes inside a part leaves the entropy unchanged") {
  auto rng = testing::seeded(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 9;
    const Graph graph = random_connected_graph(rng, n, 0.4);
    const Bipartition p = random_bipartition(rng, n);
    // Shuffle labels within A and within B separately.
    std::vector<int> a(p.part_a().begin(), p.part_a().end()), a2 = a;
    std::vector<int> b(p.part_b().begin(), p.part_b().end()), b2 = b;
    std::shuffle(a2.begin(), a2.end(), rng);
    std::shuffle(b2.begin(), b2.end(), rng);
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < a.size(); ++i) perm[a[i]] = a2[i];
    for (std::size_t i = 0; i < b.size(); ++i) perm[b[i]] = b2[i];
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : graph.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    const Graph relabelled(n, edges);
    CHECK(testing::entropy_direct(graph, p, 0.8) == Approx(testing::entropy_direct(relabelled, p, 0.8)).epsilon(1e-10));
  }
}

TEST_CASE("adding a cut edge between complete blocks raises the entropy") {
  // K_{m,n}-style growth: more boundary nodes, more entanglement.
  double prev = 0.0;
  for (int m = 1; m <= 5; ++m) {
    const double s = testing::entropy_direct(complete_graph(2 * m), Bipartition(2 * m, [&] {
                                                std::vector<int> a(m);
                                                std::iota(a.begin(), a.end(), 0);
                                                return a;
                                              }()),
                                             1.0);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("single-node formula") {
  auto rng = testing::seeded(14);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph graph = random_connected_graph(rng, 2 + trial % 10, 0.4);
    const auto v = potential_matrix(graph, 1.3);
    const int node = trial % graph.size();
    const Bipartition p(graph.size(), {node});
    const auto direct = entropy(v, p);
    const double mu = single_node_mu(v, node);
    CHECK(2 * mu == Approx(direct.spectrum.nu[0]).epsilon(1e-10));
    CHECK(single_node_entropy(v, node).total == Approx(direct.total).epsilon(1e-10));
  }
}

TEST_CASE("long double pipeline agrees with double") {
  const Graph graph = lollipop_graph(4, 3);
  const Bipartition p(7, {0, 1, 2, 3});
  const auto vd = potential_matrix(graph, 2.0);
  const auto vl = potential_matrix<long double>(graph, 2.0L);
  CHECK(static_cast<double>(entropy(vl, p).total) == Approx(entropy(vd, p).total).epsilon(1e-13));
}

TEST_CASE("size mismatch is an input error") {
  const auto v = potential_matrix(path_graph(4), 1.0);
  CHECK_THROWS_AS(entropy(v, Bipartition(5, {0})), InputError);
}

TEST_CASE("two oscillators: entropy rises with coupling and vanishes as it goes to zero") {
  const Graph k2 = complete_graph(2);
  const Bipartition p(2, {0});
  double prev = 0.0;
  for (double g = 1e-2; g <= 1e6; g *= 2) {
    const auto r = entropy(potential_matrix(k2, g), p);
    CHECK(r.spectrum.d[0] == Approx(2 * g / (1 + 2 * g)).epsilon(1e-12));
    CHECK(r.total > prev);
    prev = r.total;
  }
  CHECK(testing::entropy_direct(k2, p, 1e-8) < 1e-14);
}

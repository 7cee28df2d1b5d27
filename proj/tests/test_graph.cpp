#include "doctest.h"
#include "support.hpp"

using namespace netent;

TEST_CASE("graph validates its edges") {
  CHECK_THROWS_AS(Graph(0, {}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);

  const Graph g(4, {{2, 1}, {0, 1}});
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(g.connected());
}

TEST_CASE("bipartition rejects malformed parts") {
  CHECK_THROWS_AS(Bipartition(1, {0}), InputError);
  CHECK_THROWS_AS(Bipartition(3, {}), InputError);
  CHECK_THROWS_AS(Bipartition(3, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(Bipartition(3, {0, 0}), InputError);
  CHECK_THROWS_AS(Bipartition(3, {5}), InputError);

  const Bipartition p(5, {3, 1});
  CHECK(std::vector<int>(p.part_a().begin(), p.part_a().end()) == std::vector<int>{1, 3});
  CHECK(std::vector<int>(p.part_b().begin(), p.part_b().end()) == std::vector<int>{0, 2, 4});
  CHECK(p.complement().in_a(0));
  CHECK(p.cut_edges(path_graph(5)) == 4);
}

TEST_CASE("named families have the documented shape") {
  struct Expect {
    Graph graph;
    int nodes;
    std::size_t edges;
  };
  const std::vector<Expect> cases = {
      {complete_graph(6), 6, 15},           {path_graph(8), 8, 7},
      {star_graph(5), 5, 4},                {cycle_graph(6), 6, 6},
      {complete_bipartite_graph(2, 3), 5, 6}, {barbell_graph(3, 4), 7, 3 + 6 + 1},
      {lollipop_graph(5, 4), 9, 10 + 4},    {star_coalescence_graph(3, 4), 7, 2 + 3 + 1},
      {star_path_graph(5, 4), 9, 4 + 4},    {kite_graph(), 4, 5},
      {square_graph(), 4, 4},
  };
  for (const auto& c : cases) {
    CHECK(c.graph.size() == c.nodes);
    CHECK(c.graph.edges().size() == c.edges);
    CHECK(c.graph.connected());
  }
  CHECK(star_graph(5).degree(0) == 4);
  CHECK(lollipop_graph(5, 4).adjacent(4, 5));
  CHECK(barbell_graph(3, 4).adjacent(2, 3));
  CHECK(star_coalescence_graph(3, 4).adjacent(2, 3));
  CHECK(kite_graph().degree(0) == 3);
}

TEST_CASE("make_family dispatches by name") {
  const std::vector<int> p{5, 4};
  CHECK(make_family("lollipop", p).size() == 9);
  CHECK(make_family("kite", {}).size() == 4);
  CHECK_THROWS_AS(make_family("lollipop", std::vector<int>{5}), InputError);
  CHECK_THROWS_AS(make_family("hypercube", std::vector<int>{3}), InputError);
  CHECK(family_names().size() == 11);
}

TEST_CASE("laplacian and potential matrix") {
  auto rng = testing::seeded(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph graph = random_graph(rng, 2 + trial % 9, 0.4);
    const MatrixX<double> lap = laplacian(graph);
    CHECK((lap - lap.transpose()).norm() == 0.0);
    CHECK(lap.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < graph.size(); ++i) CHECK(lap(i, i) == graph.degree(i));

    const auto v = potential_matrix(graph, 0.7);
    Eigen::SelfAdjointEigenSolver<MatrixX<double>> es(v.v);
    CHECK(es.eigenvalues().minCoeff() >= 1.0 - 1e-12);
  }
  CHECK_THROWS_AS(potential_matrix(path_graph(3), -0.1), InputError);
  CHECK_THROWS_AS(potential_matrix(path_graph(3), std::nan("")), InputError);
  CHECK(potential_matrix(path_graph(3), 0.0).v.isIdentity());
}

TEST_CASE("four-block split of a bipartition") {
  using B = FourBlockPartition;
  const Graph lolli = lollipop_graph(5, 4);
  const auto fb = four_block_of(lolli, Bipartition(9, {0, 1, 2, 3, 4}));
  CHECK(fb.sizes() == BlockSizes{4, 1, 1, 3});
  CHECK(fb.block(B::boundary_a)[0] == 4);
  CHECK(fb.block(B::boundary_b)[0] == 5);
  CHECK(has_complete_block_connections(complete_graph(6), four_block_of(complete_graph(6), Bipartition(6, {0, 1}))));
  CHECK_FALSE(has_complete_block_connections(lolli, fb));

  // An interior node adjacent to the other side is rejected.
  CHECK_THROWS_AS(FourBlockPartition::validated(path_graph(4), {{{0, 1}, {}, {2}, {3}}}), InputError);
  CHECK_THROWS_AS(FourBlockPartition::validated(path_graph(4), {{{0}, {1}, {2}, {}}}), InputError);
}

TEST_CASE("random block graphs respect the block structure") {
  auto rng = testing::seeded(2);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockSizes s{trial % 3, 1 + trial % 4, 1 + trial % 2, trial % 5};
    const auto fbg = random_complete_block_graph(rng, s, 0.5);
    const auto fb = four_block_of(fbg.graph, fbg.partition());
    CHECK(fbg.graph.size() == s.total());
    CHECK(has_complete_block_connections(fbg.graph, fb));
  }
}

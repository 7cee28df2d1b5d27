#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace netent;
using doctest::Approx;

namespace {

// Independent reference: every subset of all N nodes, both orientations.
Ratio brute_alpha(const Graph& graph) {
  const int n = graph.size();
  Ratio best{1, 0};
  bool first = true;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    int cut = 0;
    for (const Edge& e : graph.edges()) cut += ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
    const int a = __builtin_popcount(mask);
    const Ratio r = Ratio::of(cut, std::min(a, n - a));
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

// Pairs with the same number of cut edges where the higher Schmidt rank
// does not have the higher entropy.
int rank_order_violations(const ConductanceReport& report) {
  int bad = 0;
  for (const auto& x : report.records) {
    for (const auto& y : report.records) {
      if (x.cut_edges == y.cut_edges && x.schmidt_rank > y.schmidt_rank &&
          !(x.entropy->total > y.entropy->total - 1e-12)) {
        ++bad;
      }
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("ratio arithmetic") {
  CHECK(Ratio::of(6, 4) == Ratio::of(3, 2));
  CHECK(Ratio::of(6, 4).str() == "3/2");
  CHECK(Ratio::of(3, 1).str() == "3");
  CHECK(Ratio::of(0, 5) == Ratio::of(0, 1));
  CHECK(Ratio::of(1, 4) < Ratio::of(1, 3));
  CHECK_THROWS_AS(Ratio::of(1, 0), InputError);
}

TEST_CASE("known conductances") {
  CHECK(conductance(complete_graph(6)).alpha == Ratio::of(3, 1));
  CHECK(conductance(complete_graph(5)).alpha == Ratio::of(3, 1));
  CHECK(conductance(path_graph(8)).alpha == Ratio::of(1, 4));
  CHECK(conductance(kite_graph()).alpha == Ratio::of(3, 2));
  CHECK(conductance(square_graph()).alpha == Ratio::of(1, 1));
  for (int n = 4; n <= 8; ++n) CHECK(conductance(star_graph(n)).alpha == Ratio::of(1, 1));
  const auto kite = conductance(kite_graph());
  CHECK(kite.argmin == std::vector<std::vector<int>>{{0, 2}, {0, 3}});
}

TEST_CASE("property: enumeration covers every cut once and agrees with brute force") {
  auto rng = testing::seeded(40);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph graph = random_connected_graph(rng, 2 + trial % 9, 0.4);
    const auto report = conductance(graph);
    const int n = graph.size();
    CHECK(report.records.size() == (std::size_t{1} << (n - 1)) - 1);
    std::set<std::vector<int>> seen;
    for (const auto& r : report.records) {
      CHECK(2 * r.part_a.size() <= static_cast<std::size_t>(n));
      CHECK(seen.insert(r.part_a).second);
      CHECK(r.cut_edges == Bipartition(n, r.part_a).cut_edges(graph));
    }
    CHECK(report.alpha == brute_alpha(graph));
  }
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(conductance(path_graph(21)), InputError);
  CHECK_NOTHROW(conductance(path_graph(12), 12));
  CHECK_THROWS_AS(conductance(path_graph(1)), InputError);
}

TEST_CASE("complete graphs order cuts by the size of the smaller side") {
  for (int n = 2; n <= 8; ++n) {
    for (double g : {0.5, 1.0, 2.0}) {
      const auto report = entropy_conductance_table(complete_graph(n), g);
      std::vector<double> by_size(n / 2 + 1, -1.0);
      for (const auto& r : report.records) {
        const auto k = r.part_a.size();
        if (by_size[k] < 0) by_size[k] = r.entropy->total;
        CHECK(r.entropy->total == Approx(by_size[k]).epsilon(1e-12));
        CHECK(r.schmidt_rank == 1);
      }
      for (int k = 2; k <= n / 2; ++k) CHECK(by_size[k] > by_size[k - 1]);
    }
  }
}

TEST_CASE("entropy orderings of small graphs") {
  auto s = [](const Graph& graph, std::vector<int> a) {
    return testing::entropy_direct(graph, Bipartition(graph.size(), std::move(a)), 1.0);
  };
  const Graph star = star_graph(4), kite = kite_graph(), square = square_graph();
  CHECK(s(star, {0}) > s(star, {0, 1}));
  CHECK(s(star, {0, 1}) > s(star, {1}));
  CHECK(s(kite, {0, 1}) > s(kite, {0, 2}));
  CHECK(s(kite, {0, 2}) > s(kite, {0}));
  CHECK(s(kite, {0}) > s(kite, {2}));
  CHECK(s(square, {0, 2}) > s(square, {0, 1}));
  CHECK(s(square, {0, 1}) > s(square, {0}));
  // Frozen values at g = 1.
  CHECK(s(kite, {0, 1}) == Approx(0.7497801928).epsilon(1e-9));
  CHECK(s(square, {0, 2}) == Approx(0.7497801928).epsilon(1e-9));
  CHECK(s(star, {1}) == Approx(0.3373).epsilon(1e-3));
}

TEST_CASE("higher Schmidt rank at equal cut size means more entropy on small symmetric graphs") {
  for (double g : {0.5, 1.0, 2.0}) {
    for (const Graph& graph : {complete_graph(6), star_graph(4), star_graph(6), kite_graph(), square_graph()}) {
      CHECK(rank_order_violations(entropy_conductance_table(graph, g)) == 0);
    }
  }
}

TEST_CASE("the rank ordering does not hold on the path P8") {
  const auto report = entropy_conductance_table(path_graph(8), 1.0);
  CHECK(rank_order_violations(report) > 0);
  auto find = [&](std::vector<int> a) {
    const auto it = std::find_if(report.records.begin(), report.records.end(),
                                 [&](const PartitionRecord& r) { return r.part_a == a; });
    REQUIRE(it != report.records.end());
    return *it;
  };
  // {2, 4, 5, 6} is stored as its complement, the side holding node 0.
  const auto high_rank = find({0, 1, 3, 7});
  const auto low_rank = find({1, 6});
  CHECK(high_rank.cut_edges == low_rank.cut_edges);
  CHECK(high_rank.schmidt_rank == 3);
  CHECK(low_rank.schmidt_rank == 2);
  CHECK(high_rank.entropy->total < low_rank.entropy->total);
}

TEST_CASE("record ordering") {
  auto report = entropy_conductance_table(kite_graph(), 1.0);
  sort_records(report, RecordOrder::entropy);
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    CHECK(report.records[i - 1].entropy->total >= report.records[i].entropy->total);
  }
  sort_records(report, RecordOrder::ratio);
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    CHECK_FALSE(report.records[i].ratio < report.records[i - 1].ratio);
  }
  sort_records(report, RecordOrder::canonical);
  CHECK(report.records.front().part_a == std::vector<int>{0});
}

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"

using namespace netent;
using nlohmann::json;

TEST_CASE("graph JSON round trip") {
  const Graph kite = kite_graph();
  const json doc = graph_to_json(kite);
  CHECK(doc["n"] == 4);
  const Graph back = graph_from_json(doc);
  REQUIRE(back.edges().size() == kite.edges().size());
  for (std::size_t i = 0; i < kite.edges().size(); ++i) CHECK(back.edges()[i] == kite.edges()[i]);
}

TEST_CASE("malformed graph JSON") {
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1.5]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": "3", "edges": []})")), InputError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 7]]})")), InputError);
  CHECK_THROWS_AS(part_a_from_json(json::parse(R"({"part": [0]})")), InputError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto graph_path = dir / "netent_test_graph.json";
  const auto bad_path = dir / "netent_test_bad.json";
  std::ofstream(graph_path) << graph_to_json(path_graph(5)).dump();
  std::ofstream(bad_path) << "{ not json";
  CHECK(read_graph_file(graph_path).edges().size() == 4);
  CHECK_THROWS_AS(read_graph_file(bad_path), InputError);
  CHECK_THROWS_AS(read_graph_file(dir / "netent_missing.json"), InputError);
  std::filesystem::remove(graph_path);
  std::filesystem::remove(bad_path);
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("0,1,5") == std::vector<int>{0, 1, 5});
  CHECK(parse_int_list(" 3 , 4") == std::vector<int>{3, 4});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,x"), InputError);
  CHECK_THROWS_AS(parse_int_list("1,,2"), InputError);
}

TEST_CASE("entropy result JSON round trip keeps every bit") {
  const auto r = entropy(potential_matrix(lollipop_graph(4, 3), 0.37), Bipartition(7, {0, 1, 2, 3}), LogBase::two);
  const json doc = json::parse(result_to_json(r).dump());
  CHECK(doc["method"] == "direct");
  CHECK(doc["log_base"] == "2");
  const auto back = result_from_json(doc);
  CHECK(back.total == r.total);
  CHECK(back.spectrum.d == r.spectrum.d);
  CHECK(back.spectrum.nu == r.spectrum.nu);
  CHECK(back.log_base == LogBase::two);
  CHECK(back.spectrum.rank() == r.spectrum.rank());
}

TEST_CASE("conductance report JSON") {
  const json doc = report_to_json(conductance(kite_graph()));
  CHECK(doc["alpha"] == "3/2");
  CHECK(doc["alpha_value"] == 1.5);
  CHECK(doc["records"].size() == 7);
}

TEST_CASE("double formatting round trips") {
  for (double x : {0.1, 1.0 / 3.0, 6.02e23, -2.5e-300}) CHECK(std::stod(format_double(x)) == x);
}

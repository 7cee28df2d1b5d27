#pragma once

// File formats:
//   graph      {"n": <int>, "edges": [[i, j], ...]}       (0-based nodes)
//   partition  {"part_a": [i, ...]}
//   results    documents carry "schema": 1 at the top level.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netent/conductance.hpp"
#include "netent/graph.hpp"
#include "netent/reduction.hpp"

namespace netent {

inline constexpr int kSchemaVersion = 1;

Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& graph);
Graph read_graph_file(const std::filesystem::path& path);

std::vector<int> part_a_from_json(const nlohmann::json& doc);
std::vector<int> read_partition_file(const std::filesystem::path& path);

/// "0,1,5" -> {0, 1, 5}. Throws InputError on malformed items.
std::vector<int> parse_int_list(std::string_view text);

nlohmann::json result_to_json(const EntropyResult<double>& result);
/// Inverse of result_to_json; warnings are not restored.
EntropyResult<double> result_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const ConductanceReport& report);

/// printf("%.17g"): enough digits to round-trip any double.
std::string format_double(double x);

}  // namespace netent

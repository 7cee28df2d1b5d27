#include "netent/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "netent/errors.hpp"

namespace netent {

using nlohmann::json;

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

int as_node(const json& j, std::string_view where) {
  if (!j.is_number_integer()) {
    throw InputError(std::string(where) + ": node indices must be integers");
  }
  return j.get<int>();
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) {
    throw InputError("graph JSON: \"n\" must be an integer");
  }
  if (!doc["edges"].is_array()) {
    throw InputError("graph JSON: \"edges\" must be an array");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw InputError("graph JSON: each edge must be a pair [i, j]");
    }
    edges.emplace_back(as_node(e[0], "edge"), as_node(e[1], "edge"));
  }
  return Graph(doc["n"].get<int>(), edges);
}

json graph_to_json(const Graph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  return {{"n", graph.size()}, {"edges", std::move(edges)}};
}

Graph read_graph_file(const std::filesystem::path& path) { return graph_from_json(parse_file(path)); }

std::vector<int> part_a_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("part_a") || !doc["part_a"].is_array()) {
    throw InputError("partition JSON needs an array \"part_a\"");
  }
  std::vector<int> out;
  for (const auto& i : doc["part_a"]) out.push_back(as_node(i, "part_a"));
  return out;
}

std::vector<int> read_partition_file(const std::filesystem::path& path) {
  return part_a_from_json(parse_file(path));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("expected a comma-separated list of integers, got '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

json result_to_json(const EntropyResult<double>& r) {
  json out = {{"method", to_string(r.method)},
              {"log_base", to_string(r.log_base)},
              {"total", r.total},
              {"schmidt_rank", r.spectrum.rank()},
              {"d", r.spectrum.d},
              {"nu", r.spectrum.nu},
              {"mode_entropy", r.spectrum.mode_entropy}};
  if (!r.spectrum.warnings.empty()) out["warnings"] = r.spectrum.warnings;
  return out;
}

EntropyResult<double> result_from_json(const json& doc) {
  EntropyResult<double> r;
  try {
    const auto method = doc.at("method").get<std::string>();
    if (method == "direct") r.method = Method::direct;
    else if (method == "schur") r.method = Method::schur;
    else if (method == "closed_form") r.method = Method::closed_form;
    else if (method == "oracle") r.method = Method::oracle;
    else throw InputError("unknown method '" + method + "'");
    const auto base = doc.at("log_base").get<std::string>();
    if (base != "e" && base != "2") throw InputError("unknown log base '" + base + "'");
    r.log_base = base == "e" ? LogBase::e : LogBase::two;
    r.total = doc.at("total").get<double>();
    r.spectrum.d = doc.at("d").get<std::vector<double>>();
    r.spectrum.nu = doc.at("nu").get<std::vector<double>>();
    r.spectrum.mode_entropy = doc.at("mode_entropy").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("entropy result JSON: ") + e.what());
  }
  return r;
}

json report_to_json(const ConductanceReport& report) {
  json records = json::array();
  for (const auto& rec : report.records) {
    json row = {{"part_a", rec.part_a},
                {"cut_edges", rec.cut_edges},
                {"ratio", rec.ratio.str()},
                {"ratio_value", rec.ratio.value()}};
    if (rec.entropy) {
      row["entropy"] = rec.entropy->total;
      row["schmidt_rank"] = rec.schmidt_rank;
    }
    records.push_back(std::move(row));
  }
  return {{"nodes", report.nodes},
          {"alpha", report.alpha.str()},
          {"alpha_value", report.alpha.value()},
          {"argmin", report.argmin},
          {"records", std::move(records)}};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace netent

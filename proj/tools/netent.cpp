// netent: entanglement entropy of harmonic-oscillator networks.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numerical error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netent/netent.hpp"

namespace {

using nlohmann::json;
using namespace netent;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

enum class Format { json, csv, table };
enum class MethodChoice { direct, schur, closed_form, oracle, all };

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log_spaced = true;

  std::vector<double> values() const {
    std::vector<double> out;
    for (int k = 0; k < points; ++k) {
      const double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
      out.push_back(log_spaced ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                               : start + t * (stop - start));
    }
    out.front() = start;
    if (points > 1) out.back() = stop;
    return out;
  }
};

struct RunConfig {
  std::string graph_file;
  std::string family;
  std::string params;
  std::string part_a;
  std::string partition_file;
  double g = 1.0;
  std::string sweep;
  std::string log_base = "e";
  std::string method = "direct";
  std::string format;  // empty: the command's default
  std::string sort = "canonical";
  bool with_entropy = false;
  int max_nodes = kDefaultEnumerationLimit;
  std::uint64_t seed = 42;
  int trials = 0;
  double perturb = 0.0;
  std::vector<std::string> criteria;
};

Graph load_graph(const RunConfig& cfg) {
  const bool has_file = !cfg.graph_file.empty();
  const bool has_family = !cfg.family.empty();
  if (has_file == has_family) {
    throw InputError("give exactly one graph source: --graph FILE or --family NAME");
  }
  if (has_file) return read_graph_file(cfg.graph_file);
  return make_family(cfg.family, parse_int_list(cfg.params));
}

Bipartition load_partition(const RunConfig& cfg, const Graph& graph) {
  const bool has_flag = !cfg.part_a.empty();
  const bool has_file = !cfg.partition_file.empty();
  if (has_flag == has_file) {
    throw InputError("give exactly one partition source: --part-a LIST or --partition FILE");
  }
  return Bipartition(graph.size(), has_flag ? parse_int_list(cfg.part_a) : read_partition_file(cfg.partition_file));
}

LogBase parse_base(const std::string& s) { return s == "2" ? LogBase::two : LogBase::e; }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  return Format::json;
}

MethodChoice parse_method(const std::string& s) {
  static const std::map<std::string, MethodChoice> names = {{"direct", MethodChoice::direct},
                                                            {"schur", MethodChoice::schur},
                                                            {"closed-form", MethodChoice::closed_form},
                                                            {"oracle", MethodChoice::oracle},
                                                            {"all", MethodChoice::all}};
  return names.at(s);
}

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw InputError("--sweep expects start:stop:points[:log|lin]");
  }
  Sweep s;
  try {
    s.start = std::stod(parts[0]);
    s.stop = std::stod(parts[1]);
    s.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw InputError("--sweep: cannot parse '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") throw InputError("--sweep spacing must be log or lin");
    s.log_spaced = parts[3] == "log";
  }
  if (s.points < 1) throw InputError("--sweep needs at least one point");
  if (!(s.start > 0.0) || !(s.stop > 0.0) || !std::isfinite(s.start) || !std::isfinite(s.stop)) {
    throw InputError("--sweep: every coupling must be positive");
  }
  return s;
}

std::string join_values(const std::vector<double>& xs, const char* sep = " ") {
  std::string out;
  for (double x : xs) out += (out.empty() ? "" : sep) + format_double(x);
  return out;
}

std::optional<EntropyResult<double>> run_method(Method method, const Graph& graph, const Bipartition& p,
                                                double g, LogBase base) {
  const auto v = potential_matrix(graph, g);
  switch (method) {
    case Method::direct: return entropy(v, p, base);
    case Method::schur: return entropy_via_schur(v, p, base);
    case Method::oracle: return entropy_oracle(v, p, base);
    case Method::closed_form: return entropy_closed_form(graph, p, g, base);
  }
  return std::nullopt;
}

void print_warnings(const EntropyResult<double>& r) {
  for (const auto& w : r.spectrum.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_entropy(const RunConfig& cfg) {
  const Graph graph = load_graph(cfg);
  const Bipartition p = load_partition(cfg, graph);
  const LogBase base = parse_base(cfg.log_base);
  const MethodChoice choice = parse_method(cfg.method);

  std::vector<Method> methods;
  if (choice == MethodChoice::all) {
    methods = {Method::direct, Method::schur, Method::closed_form, Method::oracle};
  } else {
    methods = {choice == MethodChoice::direct        ? Method::direct
               : choice == MethodChoice::schur       ? Method::schur
               : choice == MethodChoice::closed_form ? Method::closed_form
                                                     : Method::oracle};
  }

  std::vector<EntropyResult<double>> results;
  bool closed_form_applies = true;
  for (Method m : methods) {
    auto r = run_method(m, graph, p, cfg.g, base);
    if (!r) {
      closed_form_applies = false;
      if (choice == MethodChoice::closed_form) {
        throw InputError("no closed form covers this graph and partition; use --method=direct");
      }
      std::cerr << "note: no closed form covers this graph and partition\n";
      continue;
    }
    print_warnings(*r);
    results.push_back(std::move(*r));
  }
  double max_dev = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      max_dev = std::max(max_dev, std::abs(results[i].total - results[j].total));
    }
  }

  switch (parse_format(cfg.format)) {
    case Format::json: {
      json doc = {{"schema", kSchemaVersion},
                  {"command", "entropy"},
                  {"nodes", graph.size()},
                  {"part_a", std::vector<int>(p.part_a().begin(), p.part_a().end())},
                  {"g", cfg.g},
                  {"log_base", to_string(base)}};
      json list = json::array();
      for (const auto& r : results) list.push_back(result_to_json(r));
      doc["results"] = std::move(list);
      if (choice == MethodChoice::all) {
        doc["max_pairwise_deviation"] = max_dev;
        doc["closed_form_applicable"] = closed_form_applies;
      }
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "method,total,schmidt_rank,d,nu,mode_entropy\n";
      for (const auto& r : results) {
        std::cout << to_string(r.method) << ',' << format_double(r.total) << ',' << r.spectrum.rank() << ','
                  << join_values(r.spectrum.d) << ',' << join_values(r.spectrum.nu) << ','
                  << join_values(r.spectrum.mode_entropy) << '\n';
      }
      break;
    case Format::table:
      for (const auto& r : results) {
        std::printf("%-12s S = %.12g  rank %d  d = [%s]\n", std::string(to_string(r.method)).c_str(), r.total,
                    r.spectrum.rank(), join_values(r.spectrum.d, ", ").c_str());
      }
      if (choice == MethodChoice::all) std::printf("max pairwise deviation %.3g\n", max_dev);
      break;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  const Graph graph = load_graph(cfg);
  const Bipartition p = load_partition(cfg, graph);
  const LogBase base = parse_base(cfg.log_base);
  if (cfg.sweep.empty()) throw InputError("sweep needs --sweep=start:stop:points[:log|lin]");
  const Sweep sweep = parse_sweep(cfg.sweep);
  const MethodChoice choice = parse_method(cfg.method);
  if (choice == MethodChoice::all) throw InputError("sweep takes a single --method");
  const Method method = choice == MethodChoice::schur         ? Method::schur
                        : choice == MethodChoice::closed_form ? Method::closed_form
                        : choice == MethodChoice::oracle      ? Method::oracle
                                                              : Method::direct;

  const FourBlockPartition fb = four_block_of(graph, p);
  const BlockSizes sizes = fb.sizes();
  const bool asymptotic = sizes.m2 > 0 && sizes.n2 > 0 && has_complete_block_connections(graph, fb);

  struct Row {
    double g, s, d_max, nu_max;
    std::optional<double> estimate;
  };
  std::vector<Row> rows;
  for (double g : sweep.values()) {
    const auto r = run_method(method, graph, p, g, base);
    if (!r) throw InputError("no closed form covers this graph and partition");
    print_warnings(*r);
    rows.push_back({g, r->total, r->spectrum.max_d(), r->spectrum.nu.empty() ? 1.0 : r->spectrum.nu.front(),
                    asymptotic ? std::optional(large_coupling_entropy(sizes, g, base)) : std::nullopt});
  }

  const Format format = parse_format(cfg.format);
  if (format == Format::json) {
    json list = json::array();
    for (const auto& row : rows) {
      json j = {{"g", row.g}, {"S", row.s}, {"d_max", row.d_max}, {"nu_max", row.nu_max}};
      j["asymptotic"] = row.estimate ? json(*row.estimate) : json(nullptr);
      list.push_back(std::move(j));
    }
    json doc = {{"schema", kSchemaVersion},
                {"command", "sweep"},
                {"method", to_string(method)},
                {"log_base", to_string(base)},
                {"rows", std::move(list)}};
    std::cout << doc.dump(2) << '\n';
  } else {
    const char sep = format == Format::csv ? ',' : '\t';
    std::cout << "g" << sep << "S" << sep << "d_max" << sep << "nu_max" << sep << "asymptotic\n";
    for (const auto& row : rows) {
      std::cout << format_double(row.g) << sep << format_double(row.s) << sep << format_double(row.d_max) << sep
                << format_double(row.nu_max) << sep << (row.estimate ? format_double(*row.estimate) : "") << '\n';
    }
  }
  return kExitOk;
}

int cmd_conductance(const RunConfig& cfg) {
  const Graph graph = load_graph(cfg);
  ConductanceReport report = cfg.with_entropy
                                 ? entropy_conductance_table(graph, cfg.g, parse_base(cfg.log_base), cfg.max_nodes)
                                 : conductance(graph, cfg.max_nodes);
  sort_records(report, cfg.sort == "ratio"     ? RecordOrder::ratio
                       : cfg.sort == "entropy" ? RecordOrder::entropy
                                               : RecordOrder::canonical);
  const Format format = parse_format(cfg.format);
  if (format == Format::json) {
    json doc = report_to_json(report);
    doc["schema"] = kSchemaVersion;
    doc["command"] = "conductance";
    if (cfg.with_entropy) {
      doc["g"] = cfg.g;
      doc["log_base"] = cfg.log_base;
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  auto nodes = [](const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  if (format == Format::csv) {
    std::cout << "part_a,cut_edges,ratio,ratio_value" << (cfg.with_entropy ? ",entropy,schmidt_rank" : "") << '\n';
    for (const auto& r : report.records) {
      std::cout << nodes(r.part_a) << ',' << r.cut_edges << ',' << r.ratio.str() << ',' << format_double(r.ratio.value());
      if (r.entropy) std::cout << ',' << format_double(r.entropy->total) << ',' << r.schmidt_rank;
      std::cout << '\n';
    }
    return kExitOk;
  }
  std::printf("alpha = %s over %zu partitions; minimizers:", report.alpha.str().c_str(), report.records.size());
  for (const auto& a : report.argmin) std::printf(" {%s}", nodes(a).c_str());
  std::printf("\n");
  for (const auto& r : report.records) {
    std::printf("  {%s}  cut %d  ratio %s", nodes(r.part_a).c_str(), r.cut_edges, r.ratio.str().c_str());
    if (r.entropy) std::printf("  S %.10g  rank %d", r.entropy->total, r.schmidt_rank);
    std::printf("\n");
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.perturbation = cfg.perturb;
  std::vector<int> ids;
  for (const auto& name : cfg.criteria) {
    const auto c = find_criterion(name);
    if (!c) throw InputError("unknown criterion '" + name + "'");
    ids.push_back(c->id);
  }
  if (ids.empty()) {
    for (const auto& c : criteria()) ids.push_back(c.id);
  }
  bool all_passed = true;
  json list = json::array();
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opt);
    all_passed = all_passed && r.passed;
    if (parse_format(cfg.format) == Format::json) {
      list.push_back({{"id", r.id}, {"key", r.key}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      std::cout << format_result(r) << '\n';
    }
  }
  if (parse_format(cfg.format) == Format::json) {
    json doc = {{"schema", kSchemaVersion}, {"command", "verify"}, {"seed", cfg.seed}, {"passed", all_passed}};
    doc["criteria"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

void add_graph_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph", cfg.graph_file, "Graph JSON file {\"n\": N, \"edges\": [[i,j],...]}");
  sub->add_option("--family", cfg.family, "Named graph family")
      ->check(CLI::IsMember(std::vector<std::string>(family_names().begin(), family_names().end())));
  sub->add_option("--params", cfg.params, "Family parameters, e.g. 5,4");
}

void add_partition_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--part-a", cfg.part_a, "Nodes of part A, e.g. 0,1,5");
  sub->add_option("--partition", cfg.partition_file, "Partition JSON file {\"part_a\": [...]}");
}

void add_base_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--log-base", cfg.log_base, "Logarithm base")->check(CLI::IsMember({"e", "2"}));
}

void add_format_option(CLI::App* sub, RunConfig& cfg, const std::string& default_format) {
  sub->add_option("--format", cfg.format, "Output format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement entropy of harmonic-oscillator networks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ent = app.add_subcommand("entropy", "Entropy of one bipartition");
  add_graph_options(ent, cfg);
  add_partition_options(ent, cfg);
  ent->add_option("--g", cfg.g, "Coupling strength (>= 0)")->required();
  add_base_option(ent, cfg);
  ent->add_option("--method", cfg.method, "direct | schur | closed-form | oracle | all")
      ->check(CLI::IsMember({"direct", "schur", "closed-form", "oracle", "all"}));
  add_format_option(ent, cfg, "json");

  auto* sweep = app.add_subcommand("sweep", "Entropy over a range of couplings");
  add_graph_options(sweep, cfg);
  add_partition_options(sweep, cfg);
  sweep->add_option("--sweep", cfg.sweep, "start:stop:points[:log|lin]")->required();
  add_base_option(sweep, cfg);
  sweep->add_option("--method", cfg.method, "direct | schur | closed-form | oracle")
      ->check(CLI::IsMember({"direct", "schur", "closed-form", "oracle"}));
  add_format_option(sweep, cfg, "csv");

  auto* cond = app.add_subcommand("conductance", "Conductance by exhaustive bipartition enumeration");
  add_graph_options(cond, cfg);
  cond->add_flag("--with-entropy", cfg.with_entropy, "Annotate every partition with its entropy");
  cond->add_option("--g", cfg.g, "Coupling strength for --with-entropy");
  add_base_option(cond, cfg);
  cond->add_option("--sort", cfg.sort, "Record order")->check(CLI::IsMember({"canonical", "ratio", "entropy"}));
  cond->add_option("--max-nodes", cfg.max_nodes, "Enumeration limit");
  add_format_option(cond, cfg, "json");

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_option("--criterion", cfg.criteria, "Criterion number or key (repeatable); default all");
  ver->add_option("--trials", cfg.trials, "Trial count for randomized criteria");
  ver->add_option("--seed", cfg.seed, "Random seed");
  ver->add_option("--perturb", cfg.perturb, "Debug: perturb V(0,0) before the direct method");
  add_format_option(ver, cfg, "table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cfg.format.empty()) {
    cfg.format = sweep->parsed() ? "csv" : ver->parsed() ? "table" : "json";
  }
  try {
    if (ent->parsed()) return cmd_entropy(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (cond->parsed()) return cmd_conductance(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

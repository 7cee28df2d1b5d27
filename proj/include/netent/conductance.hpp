#pragma once

// Graph conductance by exhaustive enumeration of bipartitions, optionally
// annotated with the entanglement entropy of every partition.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netent/graph.hpp"
#include "netent/reduction.hpp"

namespace netent {

/// Exact non-negative rational num/den in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

struct PartitionRecord {
  /// Smaller side, ascending; for equal sides the one holding node 0.
  std::vector<int> part_a;
  int cut_edges = 0;
  /// cut_edges / min(|A|, |B|).
  Ratio ratio;
  std::optional<EntropyResult<double>> entropy;
  /// Number of nonzero Schmidt coefficients; -1 without entropy.
  int schmidt_rank = -1;
};

struct ConductanceReport {
  int nodes = 0;
  /// min over partitions of cut / smaller side.
  Ratio alpha;
  /// Every partition attaining alpha, in canonical order.
  std::vector<std::vector<int>> argmin;
  std::vector<PartitionRecord> records;
};

constexpr int kDefaultEnumerationLimit = 20;

/// Enumerates the 2^(N-1) - 1 unordered bipartitions. Records come out sorted
/// by (|part_a|, part_a). Throws InputError for N < 2 or N > max_nodes.
ConductanceReport conductance(const Graph& graph, int max_nodes = kDefaultEnumerationLimit);

/// conductance() plus the direct-method entropy and Schmidt rank per record.
ConductanceReport entropy_conductance_table(const Graph& graph, double g, LogBase base = LogBase::e,
                                            int max_nodes = kDefaultEnumerationLimit);

enum class RecordOrder { canonical, ratio, entropy };

/// Stable re-sort: ratio ascending, or entropy descending (records without
/// entropy last). Canonical order breaks ties.
void sort_records(ConductanceReport& report, RecordOrder order);

}  // namespace netent

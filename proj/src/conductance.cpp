#include "netent/conductance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace netent {

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw InputError("ratio needs num >= 0 and den > 0");
  }
  const std::int64_t k = std::gcd(num, den);
  return {num / k, den / k};
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

bool canonical_less(const PartitionRecord& a, const PartitionRecord& b) {
  if (a.part_a.size() != b.part_a.size()) return a.part_a.size() < b.part_a.size();
  return a.part_a < b.part_a;
}

}  // namespace

ConductanceReport conductance(const Graph& graph, int max_nodes) {
  const int n = graph.size();
  if (n < 2) {
    throw InputError("conductance needs at least two nodes");
  }
  if (n > max_nodes || n > 62) {
    throw InputError("exhaustive enumeration refused for N = " + std::to_string(n) + " (limit " +
                     std::to_string(std::min(max_nodes, 62)) +
                     "); 2^(N-1) partitions is too many. Evaluate chosen partitions with the entropy command instead");
  }
  std::vector<std::uint64_t> nbr(n, 0);
  for (const Edge& e : graph.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  ConductanceReport report;
  report.nodes = n;
  const std::uint64_t count = (std::uint64_t{1} << (n - 1)) - 1;
  report.records.reserve(count);
  // Node n-1 always sits outside the mask, so each unordered split appears once.
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    const std::uint64_t other = all & ~mask;
    int cut = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      cut += std::popcount(nbr[std::countr_zero(rest)] & other);
    }
    const int size_a = std::popcount(mask);
    const int size_b = n - size_a;
    std::uint64_t side = mask;
    if (size_b < size_a || (size_a == size_b && !(mask & 1))) side = other;
    PartitionRecord rec;
    for (std::uint64_t rest = side; rest; rest &= rest - 1) rec.part_a.push_back(std::countr_zero(rest));
    rec.cut_edges = cut;
    rec.ratio = Ratio::of(cut, std::min(size_a, size_b));
    report.records.push_back(std::move(rec));
  }
  std::sort(report.records.begin(), report.records.end(), canonical_less);

  report.alpha = report.records.front().ratio;
  for (const auto& r : report.records) {
    if (r.ratio < report.alpha) report.alpha = r.ratio;
  }
  for (const auto& r : report.records) {
    if (r.ratio == report.alpha) report.argmin.push_back(r.part_a);
  }
  return report;
}

ConductanceReport entropy_conductance_table(const Graph& graph, double g, LogBase base, int max_nodes) {
  ConductanceReport report = conductance(graph, max_nodes);
  const auto v = potential_matrix(graph, g);
  for (auto& r : report.records) {
    r.entropy = entropy(v, Bipartition(graph.size(), r.part_a), base);
    r.schmidt_rank = r.entropy->spectrum.rank();
  }
  return report;
}

void sort_records(ConductanceReport& report, RecordOrder order) {
  auto& recs = report.records;
  std::sort(recs.begin(), recs.end(), canonical_less);
  if (order == RecordOrder::ratio) {
    std::stable_sort(recs.begin(), recs.end(),
                     [](const PartitionRecord& a, const PartitionRecord& b) { return a.ratio < b.ratio; });
  } else if (order == RecordOrder::entropy) {
    std::stable_sort(recs.begin(), recs.end(), [](const PartitionRecord& a, const PartitionRecord& b) {
      if (a.entropy.has_value() != b.entropy.has_value()) return a.entropy.has_value();
      return a.entropy && a.entropy->total > b.entropy->total;
    });
  }
}

}  // namespace netent

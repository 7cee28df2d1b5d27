#pragma once

// Acceptance criteria as runnable checks. Shared by the `verify` CLI
// command and the acceptance test binary.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netent {

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Overrides the trial count of the randomized criteria (1, 2, 9) when > 0.
  int trials = 0;
  /// Negative control: added to V(0,0) before the direct method in the
  /// oracle-equivalence criterion, which must then fail.
  double perturbation = 0.0;
};

struct CriterionInfo {
  int id;
  std::string_view key;
  std::string_view title;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::span<const CriterionInfo> criteria();

/// Looks a criterion up by number ("4") or key ("path"). nullopt if unknown.
std::optional<CriterionInfo> find_criterion(std::string_view name);

CriterionResult run_criterion(int id, const VerifyOptions& options = {});

std::vector<CriterionResult> run_all(const VerifyOptions& options = {});

/// "[PASS] 4 path  (0.01 s)  detail".
std::string format_result(const CriterionResult& result);

}  // namespace netent

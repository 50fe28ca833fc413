#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sigcolor {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  /// One line per individual check, prefixed "ok" or "FAIL".
  std::vector<std::string> checks;
  /// Extra listing (e.g. the enumerated sets), may be empty.
  std::vector<std::string> listing;
};

struct CriterionInfo {
  int id;
  std::string_view name;  // e.g. "lemma-3.1"
  std::string_view summary;
  double budget_seconds;
};

std::vector<CriterionInfo> criteria();

/// Accepts "1".."10" or a criterion name; throws PreconditionError otherwise.
int criterion_id(std::string_view key);

/// Runs one acceptance criterion. Passing requires every check to hold and
/// the run to finish within its time budget.
CriterionResult run_criterion(int id, const ReproduceOptions& options = {});

std::vector<CriterionResult> run_all(const ReproduceOptions& options = {});

}  // namespace sigcolor

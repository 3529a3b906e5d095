#pragma once

#include "spl/harness/config.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spl {

/// One checked instance. Theorem tests carry holds; ratio records carry an
/// informational quantity and never fail a run.
struct Record {
  std::string check;
  std::string instance;
  std::string lhs;   ///< exact "num/den", or a decimal for log-scale ratios
  std::string rhs;
  bool is_ratio = false;
  bool holds = true;
  std::string ratio;
  double elapsed_ms = 0;

  std::string holds_or_ratio() const { return is_ratio ? ratio : (holds ? "true" : "false"); }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string detail;
  double elapsed_ms = 0;
};

struct BatteryReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  std::vector<Record> records;

  bool failed() const;
  /// 0 when every theorem test held, 1 otherwise.
  int exit_code() const { return failed() ? 1 : 0; }
};

BatteryReport run_battery(const ExperimentConfig& cfg);

/// Runs one criterion on its own (1..13).
CriterionResult run_criterion(int id, const ExperimentConfig& cfg, std::vector<Record>& records);

/// Calls f(i) for i in [0, n) on up to `workers` threads. Results must be
/// written to per-index slots so that the merge order is fixed.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f);

/// Per-instance seed derived from the run seed, the criterion and the index.
std::uint64_t instance_seed(std::uint64_t seed, int criterion, std::size_t index);

}  // namespace spl

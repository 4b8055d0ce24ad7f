#pragma once

// Seeded property suite: draws random instances per trial, lets each
// checker judge them, and tallies verdicts per report.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "opineq/generators.hpp"
#include "opineq/scenario.hpp"

namespace opineq {

/// The function pool used when a config names none.
std::vector<ScalarFunction> default_function_pool();

/// What random instances look like.
struct DrawSettings {
  SpectralInterval interval{1.0, 2.0};
  int dim_min = 1;
  int dim_max = 8;
  int max_ensemble = 4;
  std::vector<ScalarFunction> pool;
};

/// One random instance for the theorem: a function triple from the pool
/// (substitutions applied), operators and states, or tuples.
Inputs draw_inputs(const TheoremInfo& info, Rng& rng, const DrawSettings& settings);

/// Report ids the theorem produces, in evaluation order.
std::vector<std::string> report_ids(const TheoremInfo& info);

struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 10000;
  int dim_min = 1;
  int dim_max = 8;
  SpectralInterval interval{1.0, 2.0};
  std::vector<ScalarFunction> function_pool;  // empty: default_function_pool()
  int grid_n = default_grid;
  std::vector<std::string> theorem_ids;  // empty: every theorem the interval admits
  int threads = 1;

  /// Throws config_invalid.
  void validate() const;
};

/// Keys: seed, trials, dim_min, dim_max, interval, function_pool, grid,
/// theorems, threads. Missing keys keep their defaults.
TrialConfig config_from_json(const json& j);
json to_json(const TrialConfig& c);

struct ReportTally {
  std::string report_id;
  std::string theorem_id;
  long holds = 0;
  long violated = 0;
  long not_met = 0;
  long near_miss = 0;  // holds, but with a gap in [-10 tol, 0)
  double worst_gap = std::numeric_limits<double>::infinity();
  long worst_trial = -1;
  json worst_bundle;  // scenario document reproducing the worst gap

  long total() const { return holds + violated + not_met; }
};

struct SuiteSummary {
  TrialConfig config;
  std::vector<ReportTally> tallies;
  double wall_seconds = 0.0;

  long total_violated() const;
};

struct SuiteResult {
  SuiteSummary summary;
  std::string report_lines;  // one JSON record per (trial, report)
};

/// Deterministic in the config; the thread count only affects speed.
SuiteResult run_suite(const TrialConfig& config);

/// Summary as JSON lines: a config record, then one record per report.
std::string summary_jsonl(const SuiteSummary& s);
std::string summary_csv(const SuiteSummary& s);

/// Writes reports.jsonl, summary.jsonl and summary.csv into dir.
void write_suite_outputs(const SuiteResult& r, const std::string& dir);

}  // namespace opineq

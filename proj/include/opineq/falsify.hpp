#pragma once

// Counterexample search with one hypothesis switched off: random sampling,
// then local perturbation of the best instance, minimizing the oriented gap.

#include <cstdint>
#include <optional>
#include <string>

#include "opineq/suite.hpp"

namespace opineq {

enum class DropHypothesis { none, synchrony, spectral_containment, normalization };
std::string_view to_string(DropHypothesis d);
/// "none", "synchrony", "spectral-containment", "normalization" (underscores accepted).
DropHypothesis drop_from_string(const std::string& s);

struct FalsifyConfig {
  std::string theorem_id;
  DropHypothesis drop = DropHypothesis::none;
  long budget = 100000;  // evaluations
  std::uint64_t seed = 0;
  SpectralInterval interval{1.0, 2.0};
  int dim_min = 2;
  int dim_max = 4;
  std::vector<ScalarFunction> pool;  // empty: default_function_pool()
  int grid_n = default_grid;
};

struct FalsifyResult {
  bool found = false;  // best gap below the violation threshold
  double best_gap = 0.0;
  std::string best_report;
  long evaluations = 0;
  std::optional<json> bundle;  // scenario reproducing the best gap
  std::optional<InequalityReport> report;
};

/// Throws unknown_theorem, or config_invalid when the theorem has no such
/// hypothesis to drop.
FalsifyResult falsify(const FalsifyConfig& config);

json to_json(const FalsifyResult& r);

}  // namespace opineq

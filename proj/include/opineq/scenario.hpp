#pragma once

// Theorem registry, input bundles, and the scenario document runner shared
// by the CLI, the property suite and the counterexample search.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opineq/io.hpp"

namespace opineq {

enum class Family {
  pompeiu_sign,       // single operator, sign of the Pompeiu–Čebyšev functional
  weighted_cauchy,    // f = g, no hypothesis
  kantorovich,        // 1 <= <A^-1x,x><Ax,x> <= K
  two_operator,
  pompeiu_refined,    // scalar <Ax,x> refinement
  inverse_pair,       // scalars <Ax,x>, <A^-1x,x>
  ensemble_sign,
  ensemble_refined,
  ensemble_inverse_bound,
  ensemble_kantorovich,
  discrete_chebyshev,
};

/// A checked inequality and how it specializes its family: g := f,
/// g := 1, h := s, or h := 1.
struct TheoremInfo {
  std::string id;
  Family family;
  bool g_is_f = false;
  bool g_is_one = false;
  bool h_is_identity = false;
  bool h_is_one = false;
  bool needs_positive_interval = false;
  std::string summary;
};

const std::vector<TheoremInfo>& theorem_registry();
/// Throws unknown_theorem.
const TheoremInfo& theorem_info(const std::string& id);

/// Everything any checker may consume. Unused members stay empty.
struct Inputs {
  std::optional<ScalarFunction> f, g, h;
  std::optional<HermitianOperator> a, b;
  std::optional<StateVector> x, y;
  std::optional<OperatorEnsemble> ensemble;
  std::vector<SpectralInterval> intervals;  // per-operator, ensemble Kantorovich
  std::optional<SpectralInterval> declared;  // Kantorovich constant override
  std::vector<double> tuple_a, tuple_b;
  std::optional<Direction> direction;  // none: pick from synchrony evidence
};

/// Applies the theorem's substitutions (g := f etc.) to the function slots.
void specialize(const TheoremInfo& info, Inputs& in);

/// Direction supported by the grid evidence (>= preferred), or nullopt when mixed.
std::optional<Direction> supported_direction(const ScalarFunction& f, const ScalarFunction& g,
                                             const ScalarFunction& h, const SpectralInterval& interval, int grid_n);

/// Runs the theorem's checker; most families give one report, the
/// Kantorovich families give one per link.
std::vector<InequalityReport> evaluate(const TheoremInfo& info, const Inputs& in, const CheckOptions& opts = {});

/// Scenario document -> inputs (after substitutions).
Inputs inputs_from_scenario(const json& doc, const TheoremInfo& info);
/// Inputs -> scenario document that reproduces the same evaluation bit-for-bit.
json scenario_from_inputs(const TheoremInfo& info, const Inputs& in, const CheckOptions& opts);

struct ScenarioOutcome {
  std::string name;
  std::string theorem_id;
  std::vector<InequalityReport> reports;
  std::optional<ErrorKind> error;
  std::string error_message;
  bool expectation_met = true;
  std::vector<std::string> mismatches;
  bool unexpected_violation = false;
};

/// Evaluates one scenario document and compares against its "expect" block.
/// Parse errors in the document itself propagate as parse_error.
ScenarioOutcome run_scenario(const json& doc);

json to_json(const ScenarioOutcome& o);

struct NamedScenario {
  std::string name;
  json doc;
};

/// Pinned instances of every registered inequality with their expected
/// verdicts and values.
const std::vector<NamedScenario>& scenario_library();

/// theorem id -> names of library scenarios exercising it.
std::map<std::string, std::vector<std::string>> coverage_manifest();

/// Registry ids with no library scenario (must be empty).
std::vector<std::string> uncovered_theorems();

}  // namespace opineq

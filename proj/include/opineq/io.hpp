#pragma once

// Text formats: operator/state/function literals, reports, and a JSON
// writer that prints every floating-point number with 17 significant digits.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "opineq/functionals.hpp"
#include "opineq/multi_op.hpp"

namespace opineq {

using json = nlohmann::json;

/// Parses text as JSON; syntax errors become parse_error.
json parse_document(const std::string& text);
json read_document(const std::string& path);

SpectralInterval interval_from_json(const json& j);
json to_json(const SpectralInterval& iv);

/// {"kind": "power", "p": 2.0}, {"kind": "log"}, {"kind": "tabulated", "knots": [...], "values": [...]}, ...
/// Optional "domain": [lo, hi] restricts any kind.
ScalarFunction function_from_json(const json& j);
json to_json(const ScalarFunction& f);

/// Either {"dim", "matrix": row-major [[re, im], ...], "interval"} or
/// {"dim", "eigenvalues", "eigenvectors"?, "interval"}.
HermitianOperator operator_from_json(const json& j);
/// Eigen form; round-trips bit-exactly through operator_from_json.
json to_json(const HermitianOperator& a);

/// List of [re, im] pairs (plain numbers are read as real).
StateVector state_from_json(const json& j);
json to_json(const StateVector& x);

Normalization normalization_from_json(const json& j);
OperatorEnsemble ensemble_from_json(const json& j);
json to_json(const OperatorEnsemble& e);

Direction direction_from_json(const json& j);

json to_json(const SynchronyVerdict& v);
json to_json(const MonotonicityVerdict& v);
json to_json(const InequalityReport& r);

/// "%.17g" for a double.
std::string format17(double v);

/// Compact JSON with 17-significant-digit floats.
std::string dump17(const json& j);

}  // namespace opineq

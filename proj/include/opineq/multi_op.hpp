#pragma once

// n-operator versions via the direct-sum lift, the discrete Chebyshev sum
// inequality, and the ensemble Kantorovich chain.

#include <optional>
#include <span>
#include <vector>

#include "opineq/functionals.hpp"

namespace opineq {

enum class Normalization { sum_of_squares, per_vector };
std::string_view to_string(Normalization n);

class OperatorEnsemble {
 public:
  OperatorEnsemble(std::vector<HermitianOperator> operators, std::vector<StateVector> states,
                   Normalization mode);

  std::size_t size() const noexcept { return operators_.size(); }
  const std::vector<HermitianOperator>& operators() const noexcept { return operators_; }
  const std::vector<StateVector>& states() const noexcept { return states_; }
  Normalization mode() const noexcept { return mode_; }
  const SpectralInterval& interval() const { return operators_.front().interval(); }

  /// sum_j <f(A_j)x_j,x_j>.
  double sum_expectation(const ScalarFunction& f) const;

  /// diag(A_1..A_n) with stacked state; requires sum-of-squares normalization.
  std::pair<HermitianOperator, StateVector> lift() const;

 private:
  std::vector<HermitianOperator> operators_;
  std::vector<StateVector> states_;
  Normalization mode_;
};

PompeiuTerms ensemble_terms(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                            const OperatorEnsemble& e);

/// sum<h^2> sum<fg>  >= (<=)  sum<hg> sum<hf>.
InequalityReport check_ensemble_pompeiu_sign(const ScalarFunction& f, const ScalarFunction& g,
                                             const ScalarFunction& h, const OperatorEnsemble& e,
                                             Direction direction, const CheckOptions& opts = {},
                                             std::string theorem_id = "ensemble_pc_sign");

/// Refined form with the scalar point sum_j <A_j x_j, x_j>.
InequalityReport check_ensemble_pompeiu_refined(const ScalarFunction& f, const ScalarFunction& g,
                                                const ScalarFunction& h, const OperatorEnsemble& e,
                                                Direction direction, const CheckOptions& opts = {},
                                                std::string theorem_id = "ensemble_pc_refined");

/// First index pair (i, j) with (a_i - a_j)(b_i - b_j) < 0, if any.
std::optional<std::pair<std::size_t, std::size_t>> opposite_pair(std::span<const double> a,
                                                                 std::span<const double> b);

/// mean(ab) >= mean(a) mean(b); throws not_similarly_ordered with a witness.
InequalityReport discrete_chebyshev(std::span<const double> a, std::span<const double> b);

/// n^2 <= (sum <A_j x_j,x_j>)(sum <A_j^-1 x_j,x_j>). Provable only under
/// per-vector normalization; evaluated as-is for either mode.
InequalityReport check_ensemble_inverse_bound(const OperatorEnsemble& e);

struct EnsembleChainReport {
  InequalityReport lower;   // 1 <= mean(a) mean(b)
  InequalityReport middle;  // mean(a) mean(b) <= mean(a b), needs similarly ordered (a, b)
  InequalityReport upper;   // mean(a b) <= mean(K_j)
  std::vector<double> a;    // <A_j x_j, x_j>
  std::vector<double> b;    // <A_j^-1 x_j, x_j>
  double mean_constant;            // mean of (γ_j+Γ_j)^2/(4γ_jΓ_j)
  double mean_constant_minus_form; // mean of (Γ_j-γ_j)^2/(4γ_jΓ_j), reported only
  std::vector<std::string> notes;

  bool any_violated() const;
};

EnsembleChainReport kantorovich_ensemble_chain(const OperatorEnsemble& e,
                                               std::span<const SpectralInterval> per_op_intervals);

}  // namespace opineq

#pragma once

// Čebyšev and Pompeiu–Čebyšev functionals of one selfadjoint operator, and
// checkers for the inequalities built from them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opineq/functions.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

enum class Verdict { holds, violated, hypothesis_not_met };
std::string_view to_string(Verdict v);

/// One evaluated inequality. `gap` is oriented so that the inequality
/// predicts gap >= 0 whichever way it is written.
struct InequalityReport {
  std::string theorem_id;
  Direction direction = Direction::geq;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::holds;
  std::optional<SynchronyVerdict> hypothesis_evidence;
  std::string inputs_digest;
  std::vector<std::string> notes;
};

/// 1e-9 (1 + |lhs| + |rhs|).
double inequality_tolerance(double lhs, double rhs);

/// Assembles a report: gap from direction, verdict from gap and whether the
/// hypotheses were met.
InequalityReport make_report(std::string theorem_id, Direction direction, double lhs, double rhs,
                             bool hypothesis_met, std::optional<SynchronyVerdict> evidence = std::nullopt);

/// Stable hex digest of an operator/state pair's numeric content.
std::string digest(const HermitianOperator& a, const StateVector& x);

struct CheckOptions {
  int grid_n = default_grid;
  // When false the synchrony gate is skipped and every report is judged on its gap.
  bool enforce_hypotheses = true;
};

/// C(f, g; A, x) = <f(A)g(A)x,x> - <g(A)x,x><f(A)x,x>.
double cebysev(const ScalarFunction& f, const ScalarFunction& g, const HermitianOperator& a, const StateVector& x);

/// The four expectations that make up the Pompeiu–Čebyšev functional.
struct PompeiuTerms {
  double h2;  // <h^2(A)x,x>
  double fg;  // <f(A)g(A)x,x>
  double hg;  // <h(A)g(A)x,x>
  double hf;  // <h(A)f(A)x,x>
};

PompeiuTerms pompeiu_terms(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                           const HermitianOperator& a, const StateVector& x);

/// P(f, g, h; A, x) = <h^2(A)x,x><f(A)g(A)x,x> - <h(A)g(A)x,x><h(A)f(A)x,x>.
double pompeiu_cebysev(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                       const HermitianOperator& a, const StateVector& x);

/// <h^2(A)x,x><f(A)g(A)x,x>  >= (<=)  <h(A)g(A)x,x><h(A)f(A)x,x>
/// for h-synchronous (h-asynchronous) f, g.
InequalityReport check_pompeiu_sign(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const StateVector& x, Direction direction,
                                    const CheckOptions& opts = {}, std::string theorem_id = "pc_sign");

/// <h(A)f(A)x,x>^2 <= <h^2(A)x,x><f^2(A)x,x>. Needs no synchrony hypothesis.
InequalityReport check_weighted_cauchy(const ScalarFunction& f, const ScalarFunction& h,
                                       const HermitianOperator& a, const StateVector& x,
                                       std::string theorem_id = "pc_self");

/// (γ+Γ)^2 / (4γΓ).
double kantorovich_constant(const SpectralInterval& interval);

struct KantorovichReports {
  InequalityReport lower;  // 1 <= <A^-1x,x><Ax,x>
  InequalityReport upper;  // <A^-1x,x><Ax,x> <= (γ+Γ)^2/(4γΓ)
  double product;
};

/// Lower and upper Kantorovich bounds using A's own interval.
KantorovichReports kantorovich_chain(const HermitianOperator& a, const StateVector& x);

/// Same, with the constant taken from a declared interval that need not
/// contain the spectrum.
KantorovichReports kantorovich_chain(const HermitianOperator& a, const StateVector& x,
                                     const SpectralInterval& declared);

/// Two-operator form: lhs = <h^2(B)y,y><f(A)g(A)x,x> + <h^2(A)x,x><f(B)g(B)y,y>,
/// rhs = <h(B)g(B)y,y><h(A)f(A)x,x> + <h(A)g(A)x,x><h(B)f(B)y,y>.
InequalityReport check_two_operator(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const HermitianOperator& b, const StateVector& x,
                                    const StateVector& y, Direction direction, const CheckOptions& opts = {},
                                    std::string theorem_id = "two_operator");

/// Refinement with the scalar a = <Ax,x> plugged into f, g, h:
/// lhs = h(a)^2 <fg> - <hf><hg>,
/// rhs = [h(a)<hf> - <h^2> f(a)] g(a) + [h(a) f(a) - <hf>] <hg>.
InequalityReport check_pompeiu_refined(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                       const HermitianOperator& a, const StateVector& x, Direction direction,
                                       const CheckOptions& opts = {}, std::string theorem_id = "pc_refined");

/// Scalar form in a = <Ax,x>, b = <A^-1x,x>:
/// h(a)^2 f(b) g(b) + h(b)^2 f(a) g(a)  >= (<=)  h(a) h(b) [f(b) g(a) + f(a) g(b)].
InequalityReport check_inverse_pair(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const StateVector& x, Direction direction,
                                    const CheckOptions& opts = {}, std::string theorem_id = "inverse_pair");

/// Shared refinement algebra, reused by the ensemble version.
struct RefinedSides {
  double lhs;
  double rhs;
};
RefinedSides refined_sides(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h, double point,
                           const PompeiuTerms& terms);

/// Evaluates the synchrony gate for a direction; returns the evidence and
/// whether it supports the direction.
std::pair<SynchronyVerdict, bool> synchrony_gate(const ScalarFunction& f, const ScalarFunction& g,
                                                 const ScalarFunction& h, const SpectralInterval& interval,
                                                 Direction direction, int grid_n);

}  // namespace opineq

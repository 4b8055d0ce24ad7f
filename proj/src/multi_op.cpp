#include "opineq/multi_op.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace opineq {

std::string_view to_string(Normalization n) {
  return n == Normalization::sum_of_squares ? "sum_of_squares" : "per_vector";
}

OperatorEnsemble::OperatorEnsemble(std::vector<HermitianOperator> operators, std::vector<StateVector> states,
                                   Normalization mode)
    : operators_(std::move(operators)), states_(std::move(states)), mode_(mode) {
  if (operators_.empty() || operators_.size() != states_.size())
    throw Error(ErrorKind::dimension_mismatch, "ensemble needs n >= 1 operators and one state per operator");
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < operators_.size(); ++j) {
    if (!same_interval(operators_[j].interval(), operators_.front().interval()))
      throw Error(ErrorKind::interval_mismatch, "ensemble operators must share one spectral interval");
    if (states_[j].dim() != operators_[j].dim())
      throw Error(ErrorKind::dimension_mismatch, "state dimension differs from its operator");
    const double n2 = states_[j].norm() * states_[j].norm();
    sum_sq += n2;
    if (mode_ == Normalization::per_vector && std::abs(states_[j].norm() - 1.0) > tol::norm) {
      std::ostringstream os;
      os << "state " << j << " has norm " << states_[j].norm() << ", per-vector mode needs 1";
      throw Error(ErrorKind::normalization_violation, os.str());
    }
  }
  if (mode_ == Normalization::sum_of_squares && std::abs(sum_sq - 1.0) > tol::norm) {
    std::ostringstream os;
    os << "sum of squared norms is " << sum_sq << ", sum-of-squares mode needs 1";
    throw Error(ErrorKind::normalization_violation, os.str());
  }
}

double OperatorEnsemble::sum_expectation(const ScalarFunction& f) const {
  double s = 0.0;
  for (std::size_t j = 0; j < operators_.size(); ++j) s += expectation(operators_[j], f, states_[j]);
  return s;
}

std::pair<HermitianOperator, StateVector> OperatorEnsemble::lift() const {
  if (mode_ != Normalization::sum_of_squares)
    throw Error(ErrorKind::normalization_violation, "the direct-sum lift needs sum-of-squares normalization");
  return block_diagonal(operators_, states_);
}

PompeiuTerms ensemble_terms(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                            const OperatorEnsemble& e) {
  return {e.sum_expectation(h * h), e.sum_expectation(f * g), e.sum_expectation(h * g), e.sum_expectation(h * f)};
}

namespace {

void require_sum_of_squares(const OperatorEnsemble& e) {
  if (e.mode() != Normalization::sum_of_squares)
    throw Error(ErrorKind::normalization_violation, "ensemble theorem needs sum-of-squares normalization");
}

std::pair<std::optional<SynchronyVerdict>, bool> gate(const ScalarFunction& f, const ScalarFunction& g,
                                                      const ScalarFunction& h, const OperatorEnsemble& e,
                                                      Direction direction, const CheckOptions& opts) {
  if (!opts.enforce_hypotheses) return {std::nullopt, true};
  auto [v, ok] = synchrony_gate(f, g, h, e.interval(), direction, opts.grid_n);
  return {std::move(v), ok};
}

}  // namespace

InequalityReport check_ensemble_pompeiu_sign(const ScalarFunction& f, const ScalarFunction& g,
                                             const ScalarFunction& h, const OperatorEnsemble& e,
                                             Direction direction, const CheckOptions& opts, std::string theorem_id) {
  require_sum_of_squares(e);
  auto [evidence, met] = gate(f, g, h, e, direction, opts);
  const PompeiuTerms t = ensemble_terms(f, g, h, e);
  InequalityReport r = make_report(std::move(theorem_id), direction, t.h2 * t.fg, t.hg * t.hf, met, evidence);
  r.inputs_digest = "n=" + std::to_string(e.size()) + "; f=" + f.describe() + "; g=" + g.describe() +
                    "; h=" + h.describe();
  return r;
}

InequalityReport check_ensemble_pompeiu_refined(const ScalarFunction& f, const ScalarFunction& g,
                                                const ScalarFunction& h, const OperatorEnsemble& e,
                                                Direction direction, const CheckOptions& opts,
                                                std::string theorem_id) {
  require_sum_of_squares(e);
  auto [evidence, met] = gate(f, g, h, e, direction, opts);
  double lo = e.operators().front().min_eigenvalue();
  double hi = e.operators().front().max_eigenvalue();
  for (const auto& op : e.operators()) {
    lo = std::min(lo, op.min_eigenvalue());
    hi = std::max(hi, op.max_eigenvalue());
  }
  const double point = std::clamp(e.sum_expectation(ScalarFunction::identity()), lo, hi);
  const RefinedSides s = refined_sides(f, g, h, point, ensemble_terms(f, g, h, e));
  InequalityReport r = make_report(std::move(theorem_id), direction, s.lhs, s.rhs, met, evidence);
  r.inputs_digest = "n=" + std::to_string(e.size()) + "; f=" + f.describe() + "; g=" + g.describe() +
                    "; h=" + h.describe();
  if (direction == Direction::leq)
    r.notes.emplace_back("<= variant read as full sign reversal of the >= form");
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> opposite_pair(std::span<const double> a,
                                                                 std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "tuples must have equal length");
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  const double slack = 1e-12 * (1.0 + scale * scale);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] - a[j]) * (b[i] - b[j]) < -slack) return std::pair{i, j};
  return std::nullopt;
}

InequalityReport discrete_chebyshev(std::span<const double> a, std::span<const double> b) {
  if (a.empty()) throw Error(ErrorKind::dimension_mismatch, "tuples must be non-empty");
  if (auto w = opposite_pair(a, b)) {
    std::ostringstream os;
    os << "tuples are oppositely ordered at indices (" << w->first << ", " << w->second << ")";
    throw Error(ErrorKind::not_similarly_ordered, os.str());
  }
  const double m = static_cast<double>(a.size());
  double sa = 0.0, sb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
  }
  return make_report("discrete_chebyshev", Direction::geq, sab / m, (sa / m) * (sb / m), true);
}

InequalityReport check_ensemble_inverse_bound(const OperatorEnsemble& e) {
  e.interval().require_positive("ensemble inverse bound");
  const double n = static_cast<double>(e.size());
  const double prod = e.sum_expectation(ScalarFunction::identity()) * e.sum_expectation(ScalarFunction::power(-1.0));
  InequalityReport r = make_report("ensemble_inverse_bound", Direction::leq, n * n, prod, true);
  r.inputs_digest = "n=" + std::to_string(e.size()) + "; normalization=" + std::string(to_string(e.mode()));
  if (e.mode() == Normalization::sum_of_squares)
    r.notes.emplace_back("n^2 bound evaluated under sum-of-squares normalization, where it is not implied");
  return r;
}

bool EnsembleChainReport::any_violated() const {
  return lower.verdict == Verdict::violated || middle.verdict == Verdict::violated ||
         upper.verdict == Verdict::violated;
}

EnsembleChainReport kantorovich_ensemble_chain(const OperatorEnsemble& e,
                                               std::span<const SpectralInterval> per_op_intervals) {
  if (e.mode() != Normalization::per_vector)
    throw Error(ErrorKind::normalization_violation, "ensemble Kantorovich chain needs per-vector normalization");
  if (per_op_intervals.size() != e.size())
    throw Error(ErrorKind::dimension_mismatch, "one interval per operator required");

  EnsembleChainReport out;
  const double n = static_cast<double>(e.size());
  double mean_k = 0.0, mean_k_minus = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const SpectralInterval& iv = per_op_intervals[j];
    iv.require_positive("ensemble Kantorovich chain");
    // certify the spectrum against its own interval
    const HermitianOperator op = e.operators()[j].with_interval(iv);
    out.a.push_back(expectation(op, ScalarFunction::identity(), e.states()[j]));
    out.b.push_back(expectation(op, ScalarFunction::power(-1.0), e.states()[j]));
    mean_k += kantorovich_constant(iv) / n;
    const double w = iv.upper() - iv.lower();
    mean_k_minus += w * w / (4.0 * iv.lower() * iv.upper()) / n;
  }
  out.mean_constant = mean_k;
  out.mean_constant_minus_form = mean_k_minus;

  const double mean_a = std::accumulate(out.a.begin(), out.a.end(), 0.0) / n;
  const double mean_b = std::accumulate(out.b.begin(), out.b.end(), 0.0) / n;
  double mean_ab = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) mean_ab += out.a[j] * out.b[j] / n;
  const double p1 = mean_a * mean_b;

  out.lower = make_report("ensemble_kantorovich_chain.lower", Direction::leq, 1.0, p1, true);
  const bool ordered = !opposite_pair(out.a, out.b).has_value();
  out.middle = make_report("ensemble_kantorovich_chain.middle", Direction::leq, p1, mean_ab, ordered);
  if (!ordered) out.middle.notes.emplace_back("(a_j) and (b_j) are not similarly ordered");
  out.upper = make_report("ensemble_kantorovich_chain.upper", Direction::leq, mean_ab, mean_k, true);
  std::ostringstream note;
  note.precision(17);
  note << "constant uses (γ+Γ)^2/(4γΓ); the (Γ-γ)^2 form would give " << mean_k_minus;
  out.upper.notes.push_back(note.str());
  out.notes.emplace_back("per-vector normalization ||x_j|| = 1 required; the n^2 bound fails under sum-of-squares");
  return out;
}

}  // namespace opineq

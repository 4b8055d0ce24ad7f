#include "opineq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "opineq/functions.hpp"

namespace opineq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_hermitian: return "NotHermitian";
    case ErrorKind::spectrum_out_of_interval: return "SpectrumOutOfInterval";
    case ErrorKind::invalid_interval: return "InvalidInterval";
    case ErrorKind::domain_violation: return "DomainViolation";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::interval_mismatch: return "IntervalMismatch";
    case ErrorKind::normalization_violation: return "NormalizationViolation";
    case ErrorKind::not_unit_state: return "NotUnitState";
    case ErrorKind::argument_order: return "ArgumentOrder";
    case ErrorKind::non_positive_spectrum: return "NonPositiveSpectrum";
    case ErrorKind::not_similarly_ordered: return "NotSimilarlyOrdered";
    case ErrorKind::config_invalid: return "ConfigInvalid";
    case ErrorKind::unknown_theorem: return "UnknownTheorem";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Error";
}

SpectralInterval::SpectralInterval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper) {
    std::ostringstream os;
    os << "interval [" << lower << ", " << upper << "] is not a finite interval with lower <= upper";
    throw Error(ErrorKind::invalid_interval, os.str());
  }
}

SpectralInterval SpectralInterval::interior() const {
  const double d = 1e-3 * width();
  return {lower_ + d, upper_ - d};
}

SpectralInterval SpectralInterval::hull(std::initializer_list<double> points) const {
  double lo = lower_;
  double hi = upper_;
  for (double p : points) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

void SpectralInterval::require_positive(std::string_view what) const {
  if (!positive()) {
    std::ostringstream os;
    os << what << " needs a positive spectrum, interval lower end is " << lower_;
    throw Error(ErrorKind::non_positive_spectrum, os.str());
  }
}

bool same_interval(const SpectralInterval& a, const SpectralInterval& b) {
  return std::abs(a.lower() - b.lower()) <= tol::spec && std::abs(a.upper() - b.upper()) <= tol::spec;
}

StateVector::StateVector(Vector components) : components_(std::move(components)), norm_(components_.norm()) {
  if (components_.size() == 0) throw Error(ErrorKind::dimension_mismatch, "state vector of dimension 0");
}

StateVector StateVector::normalized(Vector components) {
  const double n = components.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::normalization_violation, "cannot normalize a zero vector");
  return StateVector(components / n);
}

StateVector StateVector::basis(Eigen::Index dim, Eigen::Index k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::equal_weight(Eigen::Index dim) {
  return StateVector(Vector::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

void StateVector::require_unit() const {
  if (!is_unit()) {
    std::ostringstream os;
    os << "state norm is " << norm_ << ", expected 1";
    throw Error(ErrorKind::not_unit_state, os.str());
  }
}

namespace {

// Clamps eigenvalues that overshoot the interval by at most tol::spec.
void certify_spectrum(std::vector<double>& eigenvalues, const SpectralInterval& interval) {
  for (double& l : eigenvalues) {
    if (!interval.contains(l, tol::spec)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << l << " outside [" << interval.lower() << ", " << interval.upper() << "]";
      throw Error(ErrorKind::spectrum_out_of_interval, os.str());
    }
    l = std::clamp(l, interval.lower(), interval.upper());
  }
}

}  // namespace

HermitianOperator::HermitianOperator(std::vector<double> eigenvalues, Matrix eigenvectors, SpectralInterval interval)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)), interval_(interval) {}

HermitianOperator HermitianOperator::from_dense(const Matrix& m, const SpectralInterval& interval) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw Error(ErrorKind::dimension_mismatch, "operator matrix must be square with dim >= 1");
  const double asym = (m - m.adjoint()).norm();
  if (asym > tol::herm) {
    std::ostringstream os;
    os << "||M - M*||_F = " << asym;
    throw Error(ErrorKind::not_hermitian, os.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::not_hermitian, "eigensolver did not converge");
  const Eigen::VectorXd& vals = solver.eigenvalues();
  std::vector<double> eigenvalues(vals.data(), vals.data() + vals.size());
  certify_spectrum(eigenvalues, interval);
  return HermitianOperator(std::move(eigenvalues), solver.eigenvectors(), interval);
}

HermitianOperator HermitianOperator::from_spectrum(std::vector<double> eigenvalues, const SpectralInterval& interval,
                                                   const Matrix* eigenvectors) {
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  if (n == 0) throw Error(ErrorKind::dimension_mismatch, "operator needs at least one eigenvalue");
  Matrix u = eigenvectors ? *eigenvectors : Matrix::Identity(n, n);
  if (u.rows() != n || u.cols() != n)
    throw Error(ErrorKind::dimension_mismatch, "eigenvector matrix does not match eigenvalue count");
  const double defect = (u.adjoint() * u - Matrix::Identity(n, n)).norm();
  if (defect > tol::unitary) {
    std::ostringstream os;
    os << "eigenvector matrix is not unitary, ||U*U - I||_F = " << defect;
    throw Error(ErrorKind::not_hermitian, os.str());
  }
  for (double l : eigenvalues)
    if (!std::isfinite(l)) throw Error(ErrorKind::not_hermitian, "non-finite eigenvalue");
  certify_spectrum(eigenvalues, interval);

  // ascending order, columns permuted alongside
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
    return eigenvalues[static_cast<std::size_t>(i)] < eigenvalues[static_cast<std::size_t>(j)];
  });
  std::vector<double> sorted(eigenvalues.size());
  Matrix su(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sorted[static_cast<std::size_t>(k)] = eigenvalues[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    su.col(k) = u.col(order[static_cast<std::size_t>(k)]);
  }
  return HermitianOperator(std::move(sorted), std::move(su), interval);
}

HermitianOperator HermitianOperator::diagonal(std::vector<double> values, const SpectralInterval& interval) {
  return from_spectrum(std::move(values), interval);
}

Matrix HermitianOperator::dense() const {
  Eigen::VectorXd l = Eigen::Map<const Eigen::VectorXd>(eigenvalues_.data(), dim());
  return eigenvectors_ * l.cast<cplx>().asDiagonal() * eigenvectors_.adjoint();
}

HermitianOperator HermitianOperator::with_interval(const SpectralInterval& interval) const {
  std::vector<double> l = eigenvalues_;
  certify_spectrum(l, interval);
  return HermitianOperator(std::move(l), eigenvectors_, interval);
}

namespace {

Eigen::VectorXd spectral_values(const HermitianOperator& a, const ScalarFunction& f) {
  Eigen::VectorXd values(a.dim());
  for (Eigen::Index k = 0; k < a.dim(); ++k) {
    const double l = a.eigenvalues()[static_cast<std::size_t>(k)];
    if (!f.defined_at(l)) {
      std::ostringstream os;
      os.precision(17);
      os << f.describe() << " is not defined at eigenvalue " << l;
      throw Error(ErrorKind::domain_violation, os.str());
    }
    values(k) = f(l);
  }
  return values;
}

}  // namespace

Matrix apply_function(const HermitianOperator& a, const ScalarFunction& f) {
  const Eigen::VectorXd values = spectral_values(a, f);
  const Matrix& u = a.eigenvectors();
  return u * values.cast<cplx>().asDiagonal() * u.adjoint();
}

double expectation(const HermitianOperator& a, const ScalarFunction& f, const StateVector& x) {
  if (x.dim() != a.dim()) {
    std::ostringstream os;
    os << "state dimension " << x.dim() << " vs operator dimension " << a.dim();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  const Eigen::VectorXd values = spectral_values(a, f);
  const Matrix& u = a.eigenvectors();
  const Matrix fa = u * values.cast<cplx>().asDiagonal() * u.adjoint();
  const cplx q = x.components().dot(fa * x.components());  // x* f(A) x
  const double scale = (1.0 + values.cwiseAbs().maxCoeff()) * x.norm() * x.norm();
  if (std::abs(q.imag()) > tol::herm * scale) {
    std::ostringstream os;
    os << "quadratic form has imaginary part " << q.imag();
    throw Error(ErrorKind::not_hermitian, os.str());
  }
  return q.real();
}

double spectral_sup(const HermitianOperator& a, const ScalarFunction& f) {
  return spectral_values(a, f).cwiseAbs().maxCoeff();
}

std::pair<HermitianOperator, StateVector> block_diagonal(std::span<const HermitianOperator> ops,
                                                         std::span<const StateVector> states) {
  if (ops.empty() || ops.size() != states.size())
    throw Error(ErrorKind::dimension_mismatch, "block_diagonal needs one state per operator and n >= 1");
  const SpectralInterval& interval = ops.front().interval();
  Eigen::Index total = 0;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (!same_interval(ops[j].interval(), interval))
      throw Error(ErrorKind::interval_mismatch, "block operators must share one spectral interval");
    if (states[j].dim() != ops[j].dim())
      throw Error(ErrorKind::dimension_mismatch, "state dimension differs from its block");
    total += ops[j].dim();
    sum_sq += states[j].norm() * states[j].norm();
  }
  if (std::abs(sum_sq - 1.0) > tol::norm) {
    std::ostringstream os;
    os << "sum of squared state norms is " << sum_sq << ", expected 1";
    throw Error(ErrorKind::normalization_violation, os.str());
  }
  if (ops.size() == 1) return {ops.front(), states.front()};

  std::vector<double> eigenvalues;
  eigenvalues.reserve(static_cast<std::size_t>(total));
  Matrix u = Matrix::Zero(total, total);
  Vector x(total);
  Eigen::Index offset = 0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const Eigen::Index d = ops[j].dim();
    eigenvalues.insert(eigenvalues.end(), ops[j].eigenvalues().begin(), ops[j].eigenvalues().end());
    u.block(offset, offset, d, d) = ops[j].eigenvectors();
    x.segment(offset, d) = states[j].components();
    offset += d;
  }
  return {HermitianOperator::from_spectrum(std::move(eigenvalues), interval, &u), StateVector(std::move(x))};
}

}  // namespace opineq

#pragma once

// Finite-dimensional selfadjoint operators stored by their spectral data,
// and the continuous functional calculus f(A) = U diag(f(lambda)) U*.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "opineq/error.hpp"

namespace opineq {

class ScalarFunction;

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double norm = 1e-10;
inline constexpr double spec = 1e-8;

/// Scale-relative tolerance for identities between functions of one operator.
inline double calc(double max_f = 1.0, double max_g = 1.0) { return 1e-9 * (1.0 + max_f * max_g); }
}  // namespace tol

/// Closed interval [lower, upper] that contains a spectrum. A degenerate
/// interval (lower == upper) is allowed and describes a scalar operator.
class SpectralInterval {
 public:
  SpectralInterval(double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }
  bool positive() const noexcept { return lower_ > 0.0; }
  bool contains(double s, double slack = 0.0) const noexcept {
    return s >= lower_ - slack && s <= upper_ + slack;
  }

  /// Shrinks an open interval (a, b) to [a + d, b - d], d = 1e-3 (b - a),
  /// so that endpoint singularities stay off classification grids.
  SpectralInterval interior() const;

  /// Smallest interval containing this one and the given points.
  SpectralInterval hull(std::initializer_list<double> points) const;

  /// Throws non_positive_spectrum unless lower > 0.
  void require_positive(std::string_view what) const;

  friend bool operator==(const SpectralInterval&, const SpectralInterval&) = default;

 private:
  double lower_;
  double upper_;
};

/// True when the two intervals agree to tol::spec at both ends.
bool same_interval(const SpectralInterval& a, const SpectralInterval& b);

/// A complex vector with its Euclidean norm cached at construction.
class StateVector {
 public:
  explicit StateVector(Vector components);

  /// Rescales the input to unit norm; throws normalization_violation on a zero vector.
  static StateVector normalized(Vector components);

  /// The basis vector e_k of the given dimension.
  static StateVector basis(Eigen::Index dim, Eigen::Index k);

  /// Equal-weight unit state (1, ..., 1) / sqrt(dim).
  static StateVector equal_weight(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return components_.size(); }
  const Vector& components() const noexcept { return components_; }
  double norm() const noexcept { return norm_; }
  bool is_unit() const noexcept { return std::abs(norm_ - 1.0) <= tol::norm; }

  /// Throws not_unit_state unless the norm is one to tol::norm.
  void require_unit() const;

 private:
  Vector components_;
  double norm_;
};

/// Selfadjoint operator A = U diag(lambda) U* with a certified spectral interval.
class HermitianOperator {
 public:
  /// Diagonalizes a dense Hermitian matrix. Eigenvalues within tol::spec of
  /// the interval are clamped onto it; anything further out is an error.
  static HermitianOperator from_dense(const Matrix& m, const SpectralInterval& interval);

  /// Builds from eigenvalues and (optionally) a unitary eigenvector matrix
  /// whose column k belongs to eigenvalue k. Missing eigenvectors mean U = I.
  static HermitianOperator from_spectrum(std::vector<double> eigenvalues, const SpectralInterval& interval,
                                         const Matrix* eigenvectors = nullptr);

  /// Diagonal operator diag(values) on the given interval.
  static HermitianOperator diagonal(std::vector<double> values, const SpectralInterval& interval);

  Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(eigenvalues_.size()); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  const SpectralInterval& interval() const noexcept { return interval_; }
  double min_eigenvalue() const { return eigenvalues_.front(); }
  double max_eigenvalue() const { return eigenvalues_.back(); }

  /// U diag(lambda) U*.
  Matrix dense() const;

  /// Same spectral data re-certified against another interval.
  HermitianOperator with_interval(const SpectralInterval& interval) const;

 private:
  HermitianOperator(std::vector<double> eigenvalues, Matrix eigenvectors, SpectralInterval interval);

  std::vector<double> eigenvalues_;
  Matrix eigenvectors_;
  SpectralInterval interval_;
};

/// f(A) = U diag(f(lambda)) U*. Throws domain_violation when an eigenvalue
/// lies outside the domain of f.
Matrix apply_function(const HermitianOperator& a, const ScalarFunction& f);

/// Real part of x* f(A) x. The imaginary part is asserted to be roundoff.
double expectation(const HermitianOperator& a, const ScalarFunction& f, const StateVector& x);

/// max over the spectrum of |f(lambda)|.
double spectral_sup(const HermitianOperator& a, const ScalarFunction& f);

/// Direct sum diag(A_1, ..., A_n) with the stacked state (x_1, ..., x_n).
/// All operators must share one interval and sum ||x_j||^2 must be 1.
std::pair<HermitianOperator, StateVector> block_diagonal(std::span<const HermitianOperator> ops,
                                                         std::span<const StateVector> states);

}  // namespace opineq

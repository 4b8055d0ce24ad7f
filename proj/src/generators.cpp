#include "opineq/generators.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

Matrix random_unitary(Rng& rng, Eigen::Index dim) {
  Matrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

HermitianOperator random_operator(Rng& rng, Eigen::Index dim, const SpectralInterval& interval) {
  std::vector<double> eigenvalues(static_cast<std::size_t>(dim));
  for (double& l : eigenvalues) l = rng.uniform(interval.lower(), interval.upper());
  const Matrix u = random_unitary(rng, dim);
  return HermitianOperator::from_spectrum(std::move(eigenvalues), interval, &u);
}

StateVector random_state(Rng& rng, Eigen::Index dim, double norm) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx(rng.normal(), rng.normal());
  return StateVector(v * (norm / v.norm()));
}

OperatorEnsemble random_ensemble(Rng& rng, int n, int dim_min, int dim_max, const SpectralInterval& interval,
                                 Normalization mode) {
  std::vector<HermitianOperator> ops;
  std::vector<StateVector> states;
  std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
  if (mode == Normalization::sum_of_squares) {
    double total = 0.0;
    for (double& w : weights) total += (w = -std::log(1.0 - rng.uniform()));  // flat Dirichlet split
    for (double& w : weights) w /= total;
  }
  for (int j = 0; j < n; ++j) {
    const int d = rng.uniform_int(dim_min, dim_max);
    ops.push_back(random_operator(rng, d, interval));
    states.push_back(random_state(rng, d, std::sqrt(weights[static_cast<std::size_t>(j)])));
  }
  // Renormalize against accumulated roundoff in the split.
  if (mode == Normalization::sum_of_squares) {
    double sum_sq = 0.0;
    for (const auto& s : states) sum_sq += s.norm() * s.norm();
    const double fix = 1.0 / std::sqrt(sum_sq);
    for (auto& s : states) s = StateVector(s.components() * fix);
  }
  return OperatorEnsemble(std::move(ops), std::move(states), mode);
}

}  // namespace opineq

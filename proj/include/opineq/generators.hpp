#pragma once

#include "opineq/multi_op.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// Eigenvalues uniform on the interval, eigenvectors from a Haar-distributed
/// unitary (QR of a complex Gaussian matrix with the R-diagonal phases removed).
HermitianOperator random_operator(Rng& rng, Eigen::Index dim, const SpectralInterval& interval);

Matrix random_unitary(Rng& rng, Eigen::Index dim);

/// Complex Gaussian direction scaled to the given norm.
StateVector random_state(Rng& rng, Eigen::Index dim, double norm = 1.0);

/// n operators with dimensions drawn from [dim_min, dim_max] and states
/// normalized per the mode. For sum-of-squares the squared norms are a
/// uniform random split of 1.
OperatorEnsemble random_ensemble(Rng& rng, int n, int dim_min, int dim_max, const SpectralInterval& interval,
                                 Normalization mode);

}  // namespace opineq

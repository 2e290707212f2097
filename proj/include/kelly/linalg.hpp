#pragma once

#include <Eigen/Dense>

namespace kelly {

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
///
/// Factorization failure throws NotPositiveDefiniteError carrying the index
/// of the first non-positive pivot, so callers can report which leading
/// minor broke. Solves go through forward/back substitution; the inverse is
/// never formed.
class CholeskyFactor {
public:
    /// Factorizes `a`. Throws std::invalid_argument if `a` is not square,
    /// NotPositiveDefiniteError if a pivot is non-positive or not finite.
    explicit CholeskyFactor(const Eigen::MatrixXd& a);

    const Eigen::MatrixXd& lower() const noexcept { return l_; }

    Eigen::Index size() const noexcept { return l_.rows(); }

    /// Solves A x = b.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

    /// x' A^{-1} y without forming the inverse.
    double inverse_quadratic_form(const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y) const;

private:
    Eigen::MatrixXd l_;
};

/// Largest-over-smallest eigenvalue of a symmetric matrix. Used as the
/// near-singularity gate for covariance matrices.
double symmetric_condition_number(const Eigen::MatrixXd& a);

}  // namespace kelly

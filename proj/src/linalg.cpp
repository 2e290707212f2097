#include "kelly/linalg.hpp"

#include <cmath>
#include <string>

#include "kelly/errors.hpp"

namespace kelly {

CholeskyFactor::CholeskyFactor(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("Cholesky input must be square, got " +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()));
    }
    const Eigen::Index n = a.rows();
    l_.setZero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = a(j, j) - l_.row(j).head(j).squaredNorm();
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw NotPositiveDefiniteError(
                "matrix is not positive definite: Cholesky pivot " +
                    std::to_string(j) + " (leading minor of order " +
                    std::to_string(j + 1) + ") is non-positive",
                static_cast<int>(j));
        }
        l_(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const double s = l_.row(i).head(j).dot(l_.row(j).head(j));
            l_(i, j) = (a(i, j) - s) / l_(j, j);
        }
    }
}

Eigen::VectorXd CholeskyFactor::solve(const Eigen::VectorXd& b) const {
    if (b.size() != l_.rows()) {
        throw std::invalid_argument("Cholesky solve: length " +
                                    std::to_string(b.size()) +
                                    " does not match dimension " +
                                    std::to_string(l_.rows()));
    }
    Eigen::VectorXd y = l_.triangularView<Eigen::Lower>().solve(b);
    return l_.transpose().triangularView<Eigen::Upper>().solve(y);
}

double CholeskyFactor::inverse_quadratic_form(const Eigen::VectorXd& x,
                                              const Eigen::VectorXd& y) const {
    // x' A^{-1} y = (L^{-1} x) . (L^{-1} y)
    Eigen::VectorXd lx = l_.triangularView<Eigen::Lower>().solve(x);
    Eigen::VectorXd ly = l_.triangularView<Eigen::Lower>().solve(y);
    return lx.dot(ly);
}

double symmetric_condition_number(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a,
                                                      Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

}  // namespace kelly

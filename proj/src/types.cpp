#include "kelly/types.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kelly/errors.hpp"

namespace kelly {

struct GbmParams::Validated {
    Eigen::VectorXd mu;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd corr;
    Eigen::MatrixXd cov;
};

namespace {
constexpr double kCorrTol = 1e-12;
}  // namespace

GbmParams::Validated GbmParams::validate(Eigen::VectorXd mu,
                                         Eigen::VectorXd sigma,
                                         Eigen::MatrixXd corr) {
    const Eigen::Index m = mu.size();
    if (m == 0) {
        throw std::invalid_argument("GbmParams needs at least one instrument");
    }
    if (sigma.size() != m) {
        throw std::invalid_argument(
            "mu has length " + std::to_string(m) + " but sigma has length " +
            std::to_string(sigma.size()));
    }
    if (corr.rows() != m || corr.cols() != m) {
        throw std::invalid_argument(
            "correlation matrix is " + std::to_string(corr.rows()) + "x" +
            std::to_string(corr.cols()) + ", expected " + std::to_string(m) +
            "x" + std::to_string(m));
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if (!std::isfinite(mu(j))) {
            throw std::invalid_argument("mu entries must be finite");
        }
        if (!(sigma(j) > 0.0) || !std::isfinite(sigma(j))) {
            throw std::invalid_argument("sigma[" + std::to_string(j) +
                                        "] must be positive, got " +
                                        std::to_string(sigma(j)));
        }
        if (std::abs(corr(j, j) - 1.0) > kCorrTol) {
            throw std::invalid_argument("corr[" + std::to_string(j) + "][" +
                                        std::to_string(j) +
                                        "] must be 1 on the diagonal");
        }
        for (Eigen::Index i = 0; i < m; ++i) {
            if (!std::isfinite(corr(i, j))) {
                throw std::invalid_argument(
                    "correlation entries must be finite");
            }
            if (std::abs(corr(i, j) - corr(j, i)) > kCorrTol) {
                throw std::invalid_argument(
                    "correlation matrix is not symmetric");
            }
            if (i != j && std::abs(corr(i, j)) > 1.0 + kCorrTol) {
                throw std::invalid_argument(
                    "corr[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] = " + std::to_string(corr(i, j)) +
                    " is outside [-1, 1]");
            }
        }
    }
    // Symmetrize away sub-tolerance asymmetry so downstream algebra sees an
    // exactly symmetric matrix.
    corr = ((corr + corr.transpose()) / 2.0).eval();
    Eigen::MatrixXd cov = sigma.asDiagonal() * corr * sigma.asDiagonal();
    return {std::move(mu), std::move(sigma), std::move(corr), std::move(cov)};
}

namespace {

// The PD gate: corr must factorize (error carries the failing pivot), and
// the assembled covariance must be numerically far from singular, since
// Kelly weights blow up as it degenerates.
CholeskyFactor gated_cholesky(const Eigen::MatrixXd& corr,
                              const Eigen::MatrixXd& cov) {
    CholeskyFactor corr_check(corr);
    CholeskyFactor chol(cov);
    const double cond = symmetric_condition_number(cov);
    if (!(cond <= GbmParams::kMaxConditionNumber)) {
        throw NumericError(
            "covariance matrix is near-singular: condition number " +
            std::to_string(cond) + " exceeds 1e12");
    }
    return chol;
}

}  // namespace

void MarketConfig::validate() const {
    if (trading_days_per_year < 1) {
        throw std::invalid_argument("trading_days_per_year must be >= 1, got " +
                                    std::to_string(trading_days_per_year));
    }
    if (!std::isfinite(risk_free_rate)) {
        throw std::invalid_argument("risk_free_rate must be finite");
    }
}

GbmParams::GbmParams(Eigen::VectorXd mu, Eigen::VectorXd sigma,
                     Eigen::MatrixXd corr)
    : GbmParams(validate(std::move(mu), std::move(sigma), std::move(corr))) {}

GbmParams::GbmParams(Validated&& v)
    : mu_(std::move(v.mu)),
      sigma_(std::move(v.sigma)),
      corr_(std::move(v.corr)),
      cov_(std::move(v.cov)),
      chol_(gated_cholesky(corr_, cov_)) {}

GbmParams GbmParams::from_covariance(Eigen::VectorXd mu,
                                     const Eigen::MatrixXd& cov) {
    if (cov.rows() != cov.cols() || cov.rows() != mu.size()) {
        throw std::invalid_argument("covariance must be square and match mu");
    }
    const Eigen::Index m = mu.size();
    Eigen::VectorXd sigma(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        if (!(cov(j, j) > 0.0)) {
            throw std::invalid_argument("cov[" + std::to_string(j) + "][" +
                                        std::to_string(j) +
                                        "] must be positive");
        }
        sigma(j) = std::sqrt(cov(j, j));
    }
    Eigen::MatrixXd corr(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            corr(i, j) = i == j ? 1.0 : cov(i, j) / (sigma(i) * sigma(j));
        }
    }
    return GbmParams(std::move(mu), std::move(sigma), std::move(corr));
}

Eigen::VectorXd GbmParams::excess_drift(double risk_free_rate) const {
    return mu_.array() - risk_free_rate;
}

GbmParams GbmParams::with_mu(Eigen::VectorXd mu) const {
    return GbmParams(std::move(mu), sigma_, corr_);
}

GbmParams GbmParams::marginal(Eigen::Index j) const {
    if (j < 0 || j >= size()) {
        throw std::invalid_argument("marginal index out of range");
    }
    Eigen::VectorXd mu1(1), sigma1(1);
    mu1 << mu_(j);
    sigma1 << sigma_(j);
    return GbmParams(std::move(mu1), std::move(sigma1),
                     Eigen::MatrixXd::Identity(1, 1));
}

}  // namespace kelly

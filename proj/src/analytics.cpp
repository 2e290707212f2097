#include "kelly/analytics.hpp"

#include <cmath>
#include <string>

#include "kelly/errors.hpp"

namespace kelly {

namespace {

void check_dims(const GbmParams& params, const LeverageVector& k) {
    if (k.size() != params.size()) {
        throw std::invalid_argument(
            "leverage vector has length " + std::to_string(k.size()) +
            " but parameters cover " + std::to_string(params.size()) +
            " instruments");
    }
}

}  // namespace

Eigen::MatrixXd covariance_from_vol_corr(const Eigen::VectorXd& sigma,
                                         const Eigen::MatrixXd& corr) {
    return GbmParams(Eigen::VectorXd::Zero(sigma.size()), sigma, corr).cov();
}

double expected_log_growth(const GbmParams& params, const LeverageVector& k,
                           const MarketConfig& market) {
    check_dims(params, k);
    const double r = market.risk_free_rate;
    const Eigen::VectorXd excess = params.excess_drift(r);
    return r + k.k.dot(excess) - 0.5 * k.k.dot(params.cov() * k.k);
}

double log_return_variance(const GbmParams& params, const LeverageVector& k) {
    check_dims(params, k);
    return k.k.dot(params.cov() * k.k);
}

double sharpe_ratio(const GbmParams& params, const MarketConfig& market) {
    const Eigen::VectorXd excess = params.excess_drift(market.risk_free_rate);
    const double s2 = params.cov_cholesky().inverse_quadratic_form(excess,
                                                                   excess);
    // Clamp tiny negative round-off when mu == r e.
    return std::sqrt(std::max(s2, 0.0));
}

GrowthProfile fractional_profile(double sharpe, double alpha,
                                 const MarketConfig& market) {
    if (alpha < 0.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("kelly fraction alpha must be >= 0, got " +
                                    std::to_string(alpha));
    }
    if (sharpe < 0.0 || !std::isfinite(sharpe)) {
        throw std::invalid_argument("sharpe ratio must be >= 0, got " +
                                    std::to_string(sharpe));
    }
    const double s2 = sharpe * sharpe;
    GrowthProfile profile;
    profile.expected_log_growth =
        market.risk_free_rate + (alpha - alpha * alpha / 2.0) * s2;
    profile.log_return_variance = alpha * alpha * s2;
    profile.sharpe = sharpe;
    profile.kelly_fraction = alpha;
    return profile;
}

NormalSpec predictive_log_return(const GbmParams& params,
                                 const LeverageVector& k,
                                 const MarketConfig& market, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("prediction horizon delta must be > 0");
    }
    return NormalSpec{expected_log_growth(params, k, market) * delta,
                      log_return_variance(params, k) * delta};
}

}  // namespace kelly

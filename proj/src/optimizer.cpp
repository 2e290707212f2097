#include "kelly/optimizer.hpp"

#include <cmath>
#include <string>

#include "kelly/analytics.hpp"
#include "kelly/errors.hpp"

namespace kelly {

LeverageVector full_kelly(const GbmParams& params, const MarketConfig& market) {
    const Eigen::VectorXd excess = params.excess_drift(market.risk_free_rate);
    return LeverageVector{params.cov_cholesky().solve(excess)};
}

LeverageVector fractional_kelly(const GbmParams& params,
                                const MarketConfig& market, double alpha) {
    if (alpha < 0.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("kelly fraction alpha must be >= 0, got " +
                                    std::to_string(alpha));
    }
    return LeverageVector{alpha * full_kelly(params, market).k};
}

ConstrainedSolution constrained_kelly(const GbmParams& params,
                                      const MarketConfig& market,
                                      double kappa0) {
    if (!std::isfinite(kappa0)) {
        throw std::invalid_argument("kappa0 must be finite");
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(params.size());
    const Eigen::VectorXd excess = params.excess_drift(market.risk_free_rate);
    const CholeskyFactor& chol = params.cov_cholesky();
    const double lambda = (chol.inverse_quadratic_form(ones, excess) - kappa0) /
                          chol.inverse_quadratic_form(ones, ones);
    LeverageVector k{chol.solve(excess - lambda * ones)};
    return ConstrainedSolution{std::move(k), lambda, kappa0};
}

GrowthProfile optimal_growth(const GbmParams& params,
                             const MarketConfig& market) {
    const double s = sharpe_ratio(params, market);
    return fractional_profile(s, 1.0, market);
}

std::optional<double> kelly_fraction_estimate(const LeverageVector& k,
                                              const GbmParams& params,
                                              const MarketConfig& market) {
    constexpr double kRelTol = 1e-6;
    constexpr double kAbsFloor = 1e-12;
    if (k.size() != params.size()) {
        throw std::invalid_argument("leverage vector length does not match "
                                    "parameters");
    }
    const Eigen::VectorXd kstar = full_kelly(params, market).k;
    const double kstar_norm2 = kstar.squaredNorm();
    if (kstar_norm2 <= kAbsFloor * kAbsFloor) {
        // Full Kelly is the zero vector; every k is either not a multiple or
        // a multiple by any scalar, so the ratio is undefined.
        return std::nullopt;
    }
    // Least-squares scalar, then a componentwise collinearity check.
    const double alpha = k.k.dot(kstar) / kstar_norm2;
    for (Eigen::Index j = 0; j < k.size(); ++j) {
        const double expected = alpha * kstar(j);
        const double tol = std::max(kRelTol * std::abs(expected), kAbsFloor);
        if (std::abs(k.k(j) - expected) > tol) {
            return std::nullopt;
        }
    }
    return alpha;
}

}  // namespace kelly

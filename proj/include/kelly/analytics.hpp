#pragma once

#include <Eigen/Dense>

#include "kelly/types.hpp"

namespace kelly {

/// diag(sigma) * corr * diag(sigma). Validates sigma/corr the same way
/// GbmParams does and returns a symmetric positive definite matrix.
Eigen::MatrixXd covariance_from_vol_corr(const Eigen::VectorXd& sigma,
                                         const Eigen::MatrixXd& corr);

/// Expected log-return of capital per annum:
///   L(k) = r + k . (mu - r e) - k' Sigma k / 2.
double expected_log_growth(const GbmParams& params, const LeverageVector& k,
                           const MarketConfig& market);

/// Log-return variance of capital per annum: V(k) = k' Sigma k.
double log_return_variance(const GbmParams& params, const LeverageVector& k);

/// Portfolio Sharpe ratio S = [(mu - r e)' Sigma^{-1} (mu - r e)]^{1/2},
/// computed via the cached Cholesky factor.
double sharpe_ratio(const GbmParams& params, const MarketConfig& market);

/// The Sharpe-leverage performance profile of a fractional Kelly portfolio:
/// L = r + (alpha - alpha^2/2) S^2 and V = alpha^2 S^2. alpha is accepted on
/// [0, inf); values above one are representable (diagnostics need them) and
/// flagged through GrowthProfile::over_full_kelly().
GrowthProfile fractional_profile(double sharpe, double alpha,
                                 const MarketConfig& market);

/// Predictive law of log(A_{t+delta} / A_t): normal with mean L(k) * delta
/// and variance V(k) * delta.
NormalSpec predictive_log_return(const GbmParams& params,
                                 const LeverageVector& k,
                                 const MarketConfig& market, double delta);

}  // namespace kelly

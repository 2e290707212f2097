#pragma once

#include <Eigen/Dense>
#include <optional>

#include "kelly/linalg.hpp"

namespace kelly {

/// Market-wide conventions: the continuously-compounded risk-free rate
/// (per annum, may be zero or negative) and the trading-day count used to
/// convert between daily and annual scales.
struct MarketConfig {
    double risk_free_rate = 0.0;
    int trading_days_per_year = 260;

    /// Throws std::invalid_argument if trading_days_per_year < 1 or the
    /// rate is not finite.
    void validate() const;
};

/// Parameters of a multivariate geometric Brownian motion: per-annum drift
/// and volatility per instrument plus the correlation matrix of the driving
/// noise. The covariance diag(sigma) * corr * diag(sigma) and its Cholesky
/// factor are built once at construction.
///
/// Construction enforces: sigma > 0 componentwise, corr symmetric with unit
/// diagonal and off-diagonals in [-1, 1], corr (hence cov) positive
/// definite, and cov condition number <= 1e12. Near-singular covariances
/// are rejected outright because Kelly weights diverge as the covariance
/// degenerates.
class GbmParams {
public:
    GbmParams(Eigen::VectorXd mu, Eigen::VectorXd sigma, Eigen::MatrixXd corr);

    /// Builds from drift and covariance directly; volatilities and
    /// correlations are recovered from the covariance diagonal.
    static GbmParams from_covariance(Eigen::VectorXd mu,
                                     const Eigen::MatrixXd& cov);

    Eigen::Index size() const noexcept { return mu_.size(); }
    const Eigen::VectorXd& mu() const noexcept { return mu_; }
    const Eigen::VectorXd& sigma() const noexcept { return sigma_; }
    const Eigen::MatrixXd& corr() const noexcept { return corr_; }
    const Eigen::MatrixXd& cov() const noexcept { return cov_; }
    const CholeskyFactor& cov_cholesky() const noexcept { return chol_; }

    /// mu - r * ones.
    Eigen::VectorXd excess_drift(double risk_free_rate) const;

    /// Same sigma/corr with drift scaled to (1 - tax_j) * mu_j.
    GbmParams with_mu(Eigen::VectorXd mu) const;

    /// Marginal single-instrument parameters of instrument j.
    GbmParams marginal(Eigen::Index j) const;

    static constexpr double kMaxConditionNumber = 1e12;

private:
    struct Validated;
    static Validated validate(Eigen::VectorXd mu, Eigen::VectorXd sigma,
                              Eigen::MatrixXd corr);
    explicit GbmParams(Validated&& v);

    Eigen::VectorXd mu_;
    Eigen::VectorXd sigma_;
    Eigen::MatrixXd corr_;
    Eigen::MatrixXd cov_;
    CholeskyFactor chol_;
};

/// Per-instrument capital fractions. Entries may exceed one or be negative;
/// 1 - kappa() is the cash (or debt) fraction. Total leverage is always
/// recomputed from the entries, never stored.
struct LeverageVector {
    Eigen::VectorXd k;

    double kappa() const { return k.sum(); }
    Eigen::Index size() const noexcept { return k.size(); }
};

/// Annualized growth coordinates of a portfolio: expected log-growth L,
/// log-return variance V, Sharpe ratio S, and, when the leverage is a
/// scalar multiple of full Kelly, the Kelly fraction alpha.
struct GrowthProfile {
    double expected_log_growth = 0.0;
    double log_return_variance = 0.0;
    double sharpe = 0.0;
    std::optional<double> kelly_fraction;

    /// Kelly fractions above one take extra risk for growth achievable at
    /// lower variance; flagged so reports can call it out.
    bool over_full_kelly() const {
        return kelly_fraction.has_value() && *kelly_fraction > 1.0;
    }
};

/// Mean/variance pair of a normal law, used for predictive log-return
/// distributions.
struct NormalSpec {
    double mean = 0.0;
    double variance = 0.0;
};

}  // namespace kelly

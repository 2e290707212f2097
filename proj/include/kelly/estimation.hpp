#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "kelly/date.hpp"
#include "kelly/types.hpp"

namespace kelly {

/// Aligned dated matrix of adjusted closing prices, one column per
/// instrument. Construction enforces strictly positive prices, strictly
/// increasing dates, and at least three rows (two return observations).
class InstrumentPanel {
public:
    InstrumentPanel(std::vector<std::string> instrument_ids,
                    std::vector<Date> dates, Eigen::MatrixXd prices);

    Eigen::Index n_rows() const noexcept { return prices_.rows(); }
    Eigen::Index n_instruments() const noexcept { return prices_.cols(); }
    const std::vector<std::string>& instrument_ids() const noexcept {
        return ids_;
    }
    const std::vector<Date>& dates() const noexcept { return dates_; }
    const Eigen::MatrixXd& prices() const noexcept { return prices_; }

private:
    std::vector<std::string> ids_;
    std::vector<Date> dates_;
    Eigen::MatrixXd prices_;
};

/// (n-1) x m matrix of daily log-returns derived from an n-row panel.
struct LogReturnMatrix {
    Eigen::MatrixXd returns;

    Eigen::Index n_observations() const noexcept { return returns.rows(); }
    Eigen::Index n_instruments() const noexcept { return returns.cols(); }
};

/// Entry (t, j) = log(prices[t+1, j]) - log(prices[t, j]).
LogReturnMatrix daily_log_returns(const InstrumentPanel& panel);

/// Method-of-moments estimators from daily log-returns D with T trading
/// days per year and sample mean Dbar over the n-1 observations:
///
///   sigma2_j = T/(n-2) * sum_t (D_tj - Dbar_j)^2
///   mu_j     = T * Dbar_j + sigma2_j / 2
///   R_jk     = T / (sigma_j sigma_k (n-2)) * sum_t (D_tj - Dbar_j)(D_tk - Dbar_k)
///
/// The n-2 divisor is kept exactly as in the source estimator. The diagonal
/// of R is one by construction and is set to one exactly.
///
/// Sample correlation matrices can fail positive definiteness in
/// pathological samples; by default that is an error. With
/// `repair_correlation` the matrix is projected to the nearest valid
/// correlation matrix by clipping eigenvalues at 1e-8 and renormalizing the
/// diagonal.
GbmParams estimate_gbm_params(const LogReturnMatrix& returns,
                              const MarketConfig& market,
                              bool repair_correlation = false);

/// Drift-only tax haircut: mu_j scaled by (1 - tax_j); volatilities and
/// correlations untouched. Rates must lie in [0, 1).
GbmParams apply_tax_adjustment(const GbmParams& params,
                               const Eigen::VectorXd& tax_rates);

/// Eigenvalue-clipping projection used by the repair flag above; exposed
/// for tests.
Eigen::MatrixXd repair_correlation_matrix(const Eigen::MatrixXd& corr,
                                          double min_eigenvalue = 1e-8);

}  // namespace kelly

#include "kelly/estimation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kelly/errors.hpp"
#include "kelly/stats.hpp"

namespace kelly {

InstrumentPanel::InstrumentPanel(std::vector<std::string> instrument_ids,
                                 std::vector<Date> dates,
                                 Eigen::MatrixXd prices)
    : ids_(std::move(instrument_ids)),
      dates_(std::move(dates)),
      prices_(std::move(prices)) {
    const Eigen::Index n = prices_.rows();
    const Eigen::Index m = prices_.cols();
    if (m < 1 || static_cast<Eigen::Index>(ids_.size()) != m) {
        throw std::invalid_argument(
            "panel has " + std::to_string(ids_.size()) + " instrument ids for " +
            std::to_string(m) + " price columns");
    }
    if (static_cast<Eigen::Index>(dates_.size()) != n) {
        throw std::invalid_argument("panel has " +
                                    std::to_string(dates_.size()) +
                                    " dates for " + std::to_string(n) +
                                    " price rows");
    }
    if (n < 3) {
        throw std::invalid_argument(
            "panel needs at least 3 dates (two return observations), got " +
            std::to_string(n));
    }
    for (std::size_t t = 1; t < dates_.size(); ++t) {
        if (!(dates_[t - 1] < dates_[t])) {
            throw std::invalid_argument("panel dates must be strictly "
                                        "increasing; violation at " +
                                        dates_[t].to_string());
        }
    }
    for (Eigen::Index t = 0; t < n; ++t) {
        for (Eigen::Index j = 0; j < m; ++j) {
            const double p = prices_(t, j);
            if (!(p > 0.0) || !std::isfinite(p)) {
                throw std::invalid_argument(
                    "non-positive price for " + ids_[static_cast<std::size_t>(j)] +
                    " on " + dates_[static_cast<std::size_t>(t)].to_string());
            }
        }
    }
}

LogReturnMatrix daily_log_returns(const InstrumentPanel& panel) {
    const Eigen::Index n = panel.n_rows();
    const Eigen::Index m = panel.n_instruments();
    Eigen::MatrixXd out(n - 1, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index t = 0; t + 1 < n; ++t) {
            out(t, j) =
                std::log(panel.prices()(t + 1, j)) - std::log(panel.prices()(t, j));
        }
    }
    return LogReturnMatrix{std::move(out)};
}

GbmParams estimate_gbm_params(const LogReturnMatrix& returns,
                              const MarketConfig& market,
                              bool repair_correlation) {
    market.validate();
    const Eigen::Index n_obs = returns.n_observations();
    const Eigen::Index m = returns.n_instruments();
    if (n_obs < 2) {
        throw std::invalid_argument(
            "estimation needs at least 2 return observations (3 prices), got " +
            std::to_string(n_obs));
    }
    const double t_days = static_cast<double>(market.trading_days_per_year);
    // The source estimator divides the n-1 squared deviations by n-2, where
    // n is the number of price rows; with n_obs = n-1 that is n_obs - 1.
    const double divisor = static_cast<double>(n_obs - 1);

    Eigen::VectorXd dbar(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        CompensatedSum s;
        for (Eigen::Index t = 0; t < n_obs; ++t) s.add(returns.returns(t, j));
        dbar(j) = s.value() / static_cast<double>(n_obs);
    }

    Eigen::MatrixXd scatter(m, m);  // sum of centered cross products
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index k = j; k < m; ++k) {
            CompensatedSum s;
            for (Eigen::Index t = 0; t < n_obs; ++t) {
                s.add((returns.returns(t, j) - dbar(j)) *
                      (returns.returns(t, k) - dbar(k)));
            }
            scatter(j, k) = s.value();
            scatter(k, j) = scatter(j, k);
        }
    }

    Eigen::VectorXd sigma2 = t_days / divisor * scatter.diagonal();
    for (Eigen::Index j = 0; j < m; ++j) {
        if (!(sigma2(j) > 0.0)) {
            throw NumericError("instrument column " + std::to_string(j) +
                               " has zero sample variance (constant prices)");
        }
    }
    Eigen::VectorXd sigma = sigma2.cwiseSqrt();
    Eigen::VectorXd mu = t_days * dbar + sigma2 / 2.0;

    Eigen::MatrixXd corr(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index k = 0; k < m; ++k) {
            corr(j, k) = j == k ? 1.0
                                : t_days * scatter(j, k) /
                                      (sigma(j) * sigma(k) * divisor);
        }
    }

    if (repair_correlation) {
        try {
            return GbmParams(mu, sigma, corr);
        } catch (const NumericError&) {
            return GbmParams(mu, sigma, repair_correlation_matrix(corr));
        }
    }
    return GbmParams(std::move(mu), std::move(sigma), std::move(corr));
}

GbmParams apply_tax_adjustment(const GbmParams& params,
                               const Eigen::VectorXd& tax_rates) {
    if (tax_rates.size() != params.size()) {
        throw std::invalid_argument(
            "tax rate vector has length " + std::to_string(tax_rates.size()) +
            " for " + std::to_string(params.size()) + " instruments");
    }
    for (Eigen::Index j = 0; j < tax_rates.size(); ++j) {
        if (!(tax_rates(j) >= 0.0 && tax_rates(j) < 1.0)) {
            throw std::invalid_argument("tax rate " +
                                        std::to_string(tax_rates(j)) +
                                        " is outside [0, 1)");
        }
    }
    Eigen::VectorXd mu =
        params.mu().cwiseProduct(Eigen::VectorXd::Ones(params.size()) -
                                 tax_rates);
    return params.with_mu(std::move(mu));
}

Eigen::MatrixXd repair_correlation_matrix(const Eigen::MatrixXd& corr,
                                          double min_eigenvalue) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(corr);
    Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(min_eigenvalue);
    Eigen::MatrixXd repaired = es.eigenvectors() * clipped.asDiagonal() *
                               es.eigenvectors().transpose();
    // Renormalize to unit diagonal, then resymmetrize.
    Eigen::VectorXd d = repaired.diagonal().cwiseSqrt().cwiseInverse();
    repaired = d.asDiagonal() * repaired * d.asDiagonal();
    repaired = ((repaired + repaired.transpose()) / 2.0).eval();
    repaired.diagonal().setOnes();
    return repaired;
}

}  // namespace kelly

#include "kelly/backtest.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "kelly/errors.hpp"
#include "kelly/stats.hpp"

namespace kelly {

BacktestReport run_backtest(const InstrumentPanel& panel,
                            const LeverageVector& k,
                            const MarketConfig& market,
                            const Eigen::VectorXd& daily_drift_adjust,
                            double initial_capital) {
    market.validate();
    const Eigen::Index m = panel.n_instruments();
    if (k.size() != m) {
        throw std::invalid_argument("leverage vector has length " +
                                    std::to_string(k.size()) + " for " +
                                    std::to_string(m) + " instruments");
    }
    if (daily_drift_adjust.size() != m) {
        throw std::invalid_argument("daily drift adjustment has length " +
                                    std::to_string(daily_drift_adjust.size()) +
                                    " for " + std::to_string(m) +
                                    " instruments");
    }
    if (!(initial_capital > 0.0)) {
        throw std::invalid_argument("initial capital must be > 0");
    }

    const double t_days = static_cast<double>(market.trading_days_per_year);
    const double cash_growth =
        (1.0 - k.kappa()) * std::expm1(market.risk_free_rate / t_days);
    const Eigen::MatrixXd& prices = panel.prices();
    const Eigen::Index n = panel.n_rows();

    BacktestReport report;
    report.path.dates = panel.dates();
    report.path.initial_capital = initial_capital;
    report.path.values.resize(n);
    report.path.values(0) = initial_capital;

    std::vector<double> log_steps;
    log_steps.reserve(static_cast<std::size_t>(n - 1));
    double capital = initial_capital;
    bool ruined = false;
    for (Eigen::Index t = 0; t + 1 < n; ++t) {
        if (!ruined) {
            double gross = 1.0 + cash_growth;
            for (Eigen::Index j = 0; j < m; ++j) {
                const double adjusted = std::log(prices(t + 1, j) / prices(t, j)) -
                                        daily_drift_adjust(j);
                gross += k.k(j) * std::expm1(adjusted);
            }
            const double next = capital * gross;
            if (next > 0.0) {
                log_steps.push_back(std::log(gross));
                capital = next;
            } else {
                capital = 0.0;
                ruined = true;
                report.ruin_date = panel.dates()[static_cast<std::size_t>(t) + 1];
            }
        }
        report.path.values(t + 1) = capital;
    }

    if (log_steps.size() < 2) {
        throw NumericError(
            "backtest ruined too early to compute annualized statistics (" +
            std::to_string(log_steps.size()) + " surviving steps)");
    }
    report.annualized_log_growth = t_days * compensated_mean(log_steps);
    report.annualized_log_sd =
        std::sqrt(t_days * compensated_variance(log_steps));
    report.final_value = report.path.values(n - 1);
    report.max_drawdown = max_drawdown(report.path);
    return report;
}

DrawdownRecord max_drawdown(const CapitalPath& path) {
    const Eigen::Index n = path.values.size();
    if (n == 0 || path.dates.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("drawdown of an empty or misaligned path");
    }
    DrawdownRecord best;
    best.peak_date = path.dates[0];
    best.trough_date = path.dates[0];

    double peak_value = path.values(0);
    std::size_t peak_index = 0;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double v = path.values(t);
        // Strict improvement both here and below keeps the earliest peak
        // and, for a given peak, the earliest trough.
        if (v > peak_value) {
            peak_value = v;
            peak_index = static_cast<std::size_t>(t);
        }
        const double fraction = 1.0 - v / peak_value;
        if (fraction > best.fraction) {
            best.fraction = fraction;
            best.peak_index = peak_index;
            best.trough_index = static_cast<std::size_t>(t);
            best.peak_date = path.dates[peak_index];
            best.trough_date = path.dates[static_cast<std::size_t>(t)];
        }
    }
    return best;
}

}  // namespace kelly

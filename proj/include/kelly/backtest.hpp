#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "kelly/date.hpp"
#include "kelly/estimation.hpp"
#include "kelly/types.hpp"

namespace kelly {

/// Dated capital trajectory; values[0] is the initial capital.
struct CapitalPath {
    std::vector<Date> dates;
    Eigen::VectorXd values;
    double initial_capital = 1.0;
};

/// Largest drop from a running peak to a later trough:
/// fraction = 1 - value(trough) / value(peak), trough at or after peak.
struct DrawdownRecord {
    double fraction = 0.0;
    Date peak_date;
    Date trough_date;
    std::size_t peak_index = 0;
    std::size_t trough_index = 0;
};

struct BacktestReport {
    CapitalPath path;
    double annualized_log_growth = 0.0;  // Lhat = T * mean(log A_{t+1}/A_t)
    double annualized_log_sd = 0.0;      // sqrt(Vhat), Vhat with divisor N-1
    DrawdownRecord max_drawdown;
    double final_value = 0.0;
    std::optional<Date> ruin_date;
};

/// Replays a constant-leverage policy over a historical panel with daily
/// frictionless rebalancing. Per trading day the instrument log-return is
/// first shifted by -daily_drift_adjust_j (the tax haircut applied on a
/// daily basis), then
///
///   A_{t+1} = A_t * (1 + (1-kappa)(e^{r/T} - 1) + sum_j k_j (e^{d'_tj} - 1)).
///
/// If capital is wiped out the path freezes at zero from that date and the
/// report records the ruin date; annualized statistics cover the pre-ruin
/// steps.
BacktestReport run_backtest(const InstrumentPanel& panel,
                            const LeverageVector& k,
                            const MarketConfig& market,
                            const Eigen::VectorXd& daily_drift_adjust,
                            double initial_capital);

/// Single left-to-right pass; ties resolved to the earliest peak, then the
/// earliest trough. A path that never declines reports fraction 0 with peak
/// and trough at the first date.
DrawdownRecord max_drawdown(const CapitalPath& path);

}  // namespace kelly

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kelly/types.hpp"

namespace kelly {

/// Annualized moments of a fund's reported log-returns.
struct ReturnSummary {
    double mean_log_return = 0.0;      // L, per annum
    double log_return_variance = 0.0;  // V, per annum
    std::size_t n_observations = 0;
};

enum class RiskClass {
    fractional,      // alpha <= 1
    sub_optimal,     // 1 < alpha <= 2
    collapse_bound,  // alpha > 2: value converges to zero in probability
};

const char* to_string(RiskClass risk_class);

struct FundEvalResult {
    double alpha = 0.0;
    double sharpe = 0.0;
    RiskClass risk_class = RiskClass::fractional;
};

/// 5th/95th percentile band of (alpha, sharpe) under a seeded parametric
/// bootstrap, plus the count of replicates whose resampled summary fell
/// outside the invertible region and were skipped.
struct FundEvalInterval {
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    double sharpe_lo = 0.0;
    double sharpe_hi = 0.0;
    int n_replicates = 0;
    int n_failed = 0;
    std::uint64_t seed = 0;
};

/// Annualizes per-period log-returns: mean scaled by periods_per_year,
/// variance (divisor n-1) scaled the same way. Needs >= 2 observations.
ReturnSummary summarize_returns(std::span<const double> log_returns,
                                double periods_per_year);

/// Inverts the fractional-Kelly performance profile. With excess growth
/// L' = L - r:
///
///   alpha = 2V / (2L' + V),   S = sqrt((L' + V/2) / alpha).
///
/// Requires V > 0 (deterministic returns carry no alpha information) and
/// 2L' + V > 0 (funds below that line are outside the invertible region).
FundEvalResult reverse_engineer(const ReturnSummary& summary,
                                const MarketConfig& market);

/// Parametric bootstrap: draws n_observations log-returns from the normal
/// law fitted to `summary`, re-summarizes, re-inverts, and reports the
/// 5th/95th percentiles over n_replicates replicates. Replicates use
/// counter-derived substreams, so results are independent of n_threads.
FundEvalInterval bootstrap_fund_eval(const ReturnSummary& summary,
                                     double periods_per_year,
                                     const MarketConfig& market,
                                     int n_replicates, std::uint64_t seed,
                                     int n_threads = 1);

/// log(1 + x) per element; rejects simple returns at or below -100%.
std::vector<double> log_returns_from_simple(std::span<const double> simple);

}  // namespace kelly

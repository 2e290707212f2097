#include "kelly/fund_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "kelly/errors.hpp"
#include "kelly/rng.hpp"
#include "kelly/stats.hpp"

namespace kelly {

namespace {

// Type-7 (linear interpolation) quantile of a sorted sample.
double sorted_quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

const char* to_string(RiskClass risk_class) {
    switch (risk_class) {
        case RiskClass::fractional: return "fractional";
        case RiskClass::sub_optimal: return "sub-optimal";
        case RiskClass::collapse_bound: return "collapse-bound";
    }
    return "unknown";
}

ReturnSummary summarize_returns(std::span<const double> log_returns,
                                double periods_per_year) {
    if (log_returns.size() < 2) {
        throw std::invalid_argument(
            "return summary needs at least 2 observations, got " +
            std::to_string(log_returns.size()));
    }
    if (!(periods_per_year > 0.0)) {
        throw std::invalid_argument("periods_per_year must be > 0");
    }
    ReturnSummary summary;
    summary.mean_log_return = periods_per_year * compensated_mean(log_returns);
    summary.log_return_variance =
        periods_per_year * compensated_variance(log_returns);
    summary.n_observations = log_returns.size();
    return summary;
}

FundEvalResult reverse_engineer(const ReturnSummary& summary,
                                const MarketConfig& market) {
    if (summary.n_observations < 2) {
        throw std::invalid_argument("summary must cover >= 2 observations");
    }
    if (!(summary.log_return_variance > 0.0)) {
        throw NumericError(
            "log-return variance is zero: deterministic returns carry no "
            "information about the Kelly fraction");
    }
    const double excess = summary.mean_log_return - market.risk_free_rate;
    const double v = summary.log_return_variance;
    const double denom = 2.0 * excess + v;
    if (!(denom > 0.0)) {
        throw NumericError(
            "2(L - r) + V <= 0: summary is outside the invertible "
            "fractional-Kelly region");
    }
    FundEvalResult result;
    result.alpha = 2.0 * v / denom;
    result.sharpe = std::sqrt((excess + v / 2.0) / result.alpha);
    result.risk_class = result.alpha <= 1.0 ? RiskClass::fractional
                        : result.alpha <= 2.0 ? RiskClass::sub_optimal
                                              : RiskClass::collapse_bound;
    return result;
}

FundEvalInterval bootstrap_fund_eval(const ReturnSummary& summary,
                                     double periods_per_year,
                                     const MarketConfig& market,
                                     int n_replicates, std::uint64_t seed,
                                     int n_threads) {
    if (n_replicates < 2) {
        throw std::invalid_argument("bootstrap needs at least 2 replicates");
    }
    if (!(periods_per_year > 0.0)) {
        throw std::invalid_argument("periods_per_year must be > 0");
    }
    // Check invertibility of the point estimate up front.
    (void)reverse_engineer(summary, market);

    const double step_mean = summary.mean_log_return / periods_per_year;
    const double step_sd =
        std::sqrt(summary.log_return_variance / periods_per_year);
    const std::size_t n_obs = summary.n_observations;

    std::vector<double> alphas(static_cast<std::size_t>(n_replicates),
                               std::numeric_limits<double>::quiet_NaN());
    std::vector<double> sharpes(static_cast<std::size_t>(n_replicates),
                                std::numeric_limits<double>::quiet_NaN());

    parallel_for(
        static_cast<std::size_t>(n_replicates), n_threads, [&](std::size_t i) {
            std::mt19937_64 engine = substream_engine(seed, i);
            std::normal_distribution<double> normal(step_mean, step_sd);
            std::vector<double> draws(n_obs);
            for (auto& d : draws) d = normal(engine);
            try {
                const ReturnSummary resampled =
                    summarize_returns(draws, periods_per_year);
                const FundEvalResult replica =
                    reverse_engineer(resampled, market);
                alphas[i] = replica.alpha;
                sharpes[i] = replica.sharpe;
            } catch (const NumericError&) {
                // non-invertible replicate; left as NaN and counted below
            }
        });

    std::vector<double> ok_alpha, ok_sharpe;
    ok_alpha.reserve(alphas.size());
    ok_sharpe.reserve(sharpes.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!std::isnan(alphas[i])) {
            ok_alpha.push_back(alphas[i]);
            ok_sharpe.push_back(sharpes[i]);
        }
    }
    if (ok_alpha.size() < 2) {
        throw NumericError("bootstrap produced fewer than 2 invertible "
                           "replicates; summary is too close to the "
                           "non-invertible boundary");
    }
    std::sort(ok_alpha.begin(), ok_alpha.end());
    std::sort(ok_sharpe.begin(), ok_sharpe.end());

    FundEvalInterval interval;
    interval.alpha_lo = sorted_quantile(ok_alpha, 0.05);
    interval.alpha_hi = sorted_quantile(ok_alpha, 0.95);
    interval.sharpe_lo = sorted_quantile(ok_sharpe, 0.05);
    interval.sharpe_hi = sorted_quantile(ok_sharpe, 0.95);
    interval.n_replicates = n_replicates;
    interval.n_failed =
        n_replicates - static_cast<int>(ok_alpha.size());
    interval.seed = seed;
    return interval;
}

std::vector<double> log_returns_from_simple(std::span<const double> simple) {
    std::vector<double> out;
    out.reserve(simple.size());
    for (double x : simple) {
        if (!(x > -1.0)) {
            throw NumericError("simple return " + std::to_string(x) +
                               " is <= -100% and has no log-return");
        }
        out.push_back(std::log1p(x));
    }
    return out;
}

}  // namespace kelly

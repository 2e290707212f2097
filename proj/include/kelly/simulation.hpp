#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "kelly/date.hpp"
#include "kelly/estimation.hpp"
#include "kelly/types.hpp"

namespace kelly {

/// Full description of a Monte Carlo run. The seed is part of the spec:
/// identical specs produce bit-identical output regardless of the worker
/// count, because every path draws from its own counter-derived substream.
struct SimulationSpec {
    GbmParams params;
    LeverageVector leverage;
    MarketConfig market;
    double horizon_years = 1.0;
    int steps_per_year = 260;
    int n_paths = 1;
    std::uint64_t seed = 0;

    int n_steps() const;
    double dt() const { return 1.0 / steps_per_year; }
    void validate(bool need_leverage) const;
};

/// Simulated instrument price paths, each a (n_steps+1) x m matrix with
/// P_0 = 1 for every instrument.
struct PricePathSet {
    double dt = 0.0;
    std::vector<Eigen::MatrixXd> paths;
};

/// Simulated capital paths, each of length n_steps+1 with A_0 = 1.
/// ruin_step[i] is the first step at which path i hit zero in rebalanced
/// mode (-1 if it never did); from that step on the path is frozen at zero.
struct CapitalPathSet {
    double dt = 0.0;
    std::vector<Eigen::VectorXd> paths;
    std::vector<std::int64_t> ruin_step;

    int ruined_count() const;
};

enum class CapitalSimMode {
    /// Samples log-capital increments from the closed-form law
    /// N(L(k) dt, V(k) dt): exact in distribution, capital always positive.
    exact,
    /// Generates instrument prices and applies the discrete daily
    /// rebalancing recursion; capital can be wiped out, which marks the
    /// path as ruined and freezes it at zero.
    rebalanced,
};

const char* to_string(CapitalSimMode mode);
CapitalSimMode capital_sim_mode_from_string(const std::string& name);

/// Exact-in-distribution sampling of correlated GBM prices: per step the
/// log-price increments are jointly normal with mean (mu_j - sigma_j^2/2) dt
/// and covariance Sigma dt, generated through the Cholesky factor of Sigma.
PricePathSet simulate_price_paths(const SimulationSpec& spec, int n_threads = 1);

CapitalPathSet simulate_capital_paths(const SimulationSpec& spec,
                                      CapitalSimMode mode, int n_threads = 1);

/// Wraps one simulated price path as an InstrumentPanel with synthetic
/// consecutive dates, so simulated data can round-trip through the same
/// ingestion path as real data.
InstrumentPanel panel_from_price_path(const PricePathSet& paths,
                                      std::size_t path_index,
                                      std::vector<std::string> instrument_ids,
                                      Date start_date);

}  // namespace kelly

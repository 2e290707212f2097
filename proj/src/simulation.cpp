#include "kelly/simulation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "kelly/analytics.hpp"
#include "kelly/errors.hpp"
#include "kelly/rng.hpp"

namespace kelly {

namespace {

// exp(log-price) overflows double well before 710; treat that as a
// misconfigured simulation rather than returning inf prices.
constexpr double kLogPriceLimit = 700.0;

void check_log_magnitude(double log_value) {
    if (!(std::abs(log_value) <= kLogPriceLimit)) {
        throw NumericError(
            "simulated log-price magnitude exceeded 700; parameters or "
            "horizon produce values outside double range");
    }
}

// One path's worth of log-price increments, streamed step by step. Both the
// price simulator and the rebalanced capital simulator consume this, so a
// shared seed yields the same underlying prices in both.
template <typename StepFn>
void generate_log_increments(const SimulationSpec& spec, std::uint64_t path_index,
                             StepFn&& step) {
    const Eigen::Index m = spec.params.size();
    const double dt = spec.dt();
    const double sqrt_dt = std::sqrt(dt);
    const Eigen::VectorXd drift =
        (spec.params.mu().array() -
         0.5 * spec.params.sigma().array().square()) *
        dt;
    const Eigen::MatrixXd& chol = spec.params.cov_cholesky().lower();

    std::mt19937_64 engine = substream_engine(spec.seed, path_index);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd z(m);
    Eigen::VectorXd increment(m);
    const int n_steps = spec.n_steps();
    for (int t = 0; t < n_steps; ++t) {
        for (Eigen::Index j = 0; j < m; ++j) z(j) = normal(engine);
        increment = drift + sqrt_dt * (chol * z);
        step(increment);
    }
}

}  // namespace

int SimulationSpec::n_steps() const {
    const double exact = horizon_years * steps_per_year;
    const auto rounded = static_cast<int>(std::llround(exact));
    return rounded;
}

void SimulationSpec::validate(bool need_leverage) const {
    market.validate();
    if (!(horizon_years > 0.0)) {
        throw std::invalid_argument("horizon_years must be > 0");
    }
    if (steps_per_year < 1) {
        throw std::invalid_argument("steps_per_year must be >= 1");
    }
    if (n_paths < 1) {
        throw std::invalid_argument("n_paths must be >= 1");
    }
    if (n_steps() < 1) {
        throw std::invalid_argument(
            "horizon_years * steps_per_year must round to at least one step");
    }
    if (need_leverage && leverage.size() != params.size()) {
        throw std::invalid_argument(
            "leverage vector length " + std::to_string(leverage.size()) +
            " does not match " + std::to_string(params.size()) +
            " instruments");
    }
}

int CapitalPathSet::ruined_count() const {
    int count = 0;
    for (auto s : ruin_step) count += s >= 0 ? 1 : 0;
    return count;
}

const char* to_string(CapitalSimMode mode) {
    return mode == CapitalSimMode::exact ? "exact" : "rebalanced";
}

CapitalSimMode capital_sim_mode_from_string(const std::string& name) {
    if (name == "exact") return CapitalSimMode::exact;
    if (name == "rebalanced") return CapitalSimMode::rebalanced;
    throw std::invalid_argument("unknown capital simulation mode '" + name +
                                "' (expected 'exact' or 'rebalanced')");
}

PricePathSet simulate_price_paths(const SimulationSpec& spec, int n_threads) {
    spec.validate(false);
    const Eigen::Index m = spec.params.size();
    const int n_steps = spec.n_steps();

    PricePathSet out;
    out.dt = spec.dt();
    out.paths.assign(static_cast<std::size_t>(spec.n_paths),
                     Eigen::MatrixXd(n_steps + 1, m));

    parallel_for(static_cast<std::size_t>(spec.n_paths), n_threads,
                 [&](std::size_t i) {
                     Eigen::MatrixXd& path = out.paths[i];
                     Eigen::VectorXd log_price = Eigen::VectorXd::Zero(m);
                     path.row(0).setOnes();
                     int t = 0;
                     generate_log_increments(
                         spec, i, [&](const Eigen::VectorXd& inc) {
                             log_price += inc;
                             for (Eigen::Index j = 0; j < m; ++j) {
                                 check_log_magnitude(log_price(j));
                                 path(t + 1, j) = std::exp(log_price(j));
                             }
                             ++t;
                         });
                 });
    return out;
}

CapitalPathSet simulate_capital_paths(const SimulationSpec& spec,
                                      CapitalSimMode mode, int n_threads) {
    spec.validate(true);
    const int n_steps = spec.n_steps();
    const double dt = spec.dt();
    const double r = spec.market.risk_free_rate;

    CapitalPathSet out;
    out.dt = dt;
    out.paths.assign(static_cast<std::size_t>(spec.n_paths),
                     Eigen::VectorXd(n_steps + 1));
    out.ruin_step.assign(static_cast<std::size_t>(spec.n_paths), -1);

    if (mode == CapitalSimMode::exact) {
        const double growth =
            expected_log_growth(spec.params, spec.leverage, spec.market);
        const double variance = log_return_variance(spec.params, spec.leverage);
        const double step_mean = growth * dt;
        const double step_sd = std::sqrt(variance * dt);
        parallel_for(
            static_cast<std::size_t>(spec.n_paths), n_threads,
            [&](std::size_t i) {
                std::mt19937_64 engine = substream_engine(spec.seed, i);
                std::normal_distribution<double> normal(0.0, 1.0);
                Eigen::VectorXd& path = out.paths[i];
                double log_a = 0.0;
                path(0) = 1.0;
                for (int t = 0; t < n_steps; ++t) {
                    log_a += step_mean + step_sd * normal(engine);
                    check_log_magnitude(log_a);
                    path(t + 1) = std::exp(log_a);
                }
            });
        return out;
    }

    // Rebalanced mode: the discrete-time realization of the leverage
    // definition. The continuous-time positivity guarantee does not carry
    // over; a wiped-out path is recorded and frozen at zero.
    const double kappa = spec.leverage.kappa();
    const double cash_growth = (1.0 - kappa) * std::expm1(r * dt);
    const Eigen::VectorXd& k = spec.leverage.k;
    parallel_for(
        static_cast<std::size_t>(spec.n_paths), n_threads, [&](std::size_t i) {
            Eigen::VectorXd& path = out.paths[i];
            path(0) = 1.0;
            double capital = 1.0;
            int t = 0;
            bool ruined = false;
            generate_log_increments(
                spec, i, [&](const Eigen::VectorXd& inc) {
                    if (!ruined) {
                        double gross = 1.0 + cash_growth;
                        for (Eigen::Index j = 0; j < k.size(); ++j) {
                            gross += k(j) * std::expm1(inc(j));
                        }
                        capital *= gross;
                        if (!(capital > 0.0)) {
                            capital = 0.0;
                            ruined = true;
                            out.ruin_step[i] = t + 1;
                        }
                    }
                    path(t + 1) = capital;
                    ++t;
                });
        });
    return out;
}

InstrumentPanel panel_from_price_path(const PricePathSet& paths,
                                      std::size_t path_index,
                                      std::vector<std::string> instrument_ids,
                                      Date start_date) {
    if (path_index >= paths.paths.size()) {
        throw std::invalid_argument("path index out of range");
    }
    const Eigen::MatrixXd& prices = paths.paths[path_index];
    std::vector<Date> dates;
    dates.reserve(static_cast<std::size_t>(prices.rows()));
    for (Eigen::Index t = 0; t < prices.rows(); ++t) {
        dates.push_back(start_date.plus_days(t));
    }
    return InstrumentPanel(std::move(instrument_ids), std::move(dates), prices);
}

}  // namespace kelly

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "kelly/types.hpp"

namespace kelly::testing {

/// Random well-conditioned GbmParams: vols in [0.05, 0.5], drifts in
/// [-0.1, 0.25], correlation from a ridge-stabilized random Gram matrix.
inline GbmParams random_params(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> vol(0.05, 0.5);
    std::uniform_real_distribution<double> drift(-0.1, 0.25);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::VectorXd mu(m), sigma(m);
    for (int j = 0; j < m; ++j) {
        mu(j) = drift(rng);
        sigma(j) = vol(rng);
    }
    Eigen::MatrixXd a(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a(i, j) = gauss(rng);
    }
    Eigen::MatrixXd gram =
        a * a.transpose() + 0.4 * static_cast<double>(m) *
                                Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd d = gram.diagonal().cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd corr = d.asDiagonal() * gram * d.asDiagonal();
    corr = ((corr + corr.transpose()) / 2.0).eval();
    corr.diagonal().setOnes();
    return GbmParams(mu, sigma, corr);
}

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// Kolmogorov-Smirnov statistic of a sample against N(mean, sd^2).
inline double ks_statistic(std::vector<double> sample, double mean, double sd) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = normal_cdf((sample[i] - mean) / sd);
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

/// Plain two-pass mean/variance, deliberately naive: these back the
/// "independent re-implementation" oracles, so they must not share code
/// with the library.
inline double naive_mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double naive_variance(const std::vector<double>& xs) {
    const double m = naive_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

/// E[f(D)] for D ~ N(mean, sd^2) by composite Simpson over +-12 sd. Exact
/// enough (~1e-12) for the smooth integrands used in tests.
template <typename F>
double gaussian_expectation(F&& f, double mean, double sd, int n_points = 4001) {
    const double lo = -12.0, hi = 12.0;
    const double h = (hi - lo) / (n_points - 1);
    auto integrand = [&](double u) {
        const double phi = std::exp(-0.5 * u * u) / std::sqrt(2.0 * M_PI);
        return f(mean + sd * u) * phi;
    };
    double acc = integrand(lo) + integrand(hi);
    for (int i = 1; i + 1 < n_points; ++i) {
        acc += integrand(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

}  // namespace kelly::testing

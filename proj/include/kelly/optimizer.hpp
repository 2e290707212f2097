#pragma once

#include <optional>

#include "kelly/types.hpp"

namespace kelly {

/// Growth-maximizing leverage under a total-leverage constraint, with the
/// Lagrange multiplier that enforced it.
struct ConstrainedSolution {
    LeverageVector k;
    double lambda = 0.0;
    double kappa_target = 0.0;
};

/// Growth-optimal (full Kelly) leverage k* = Sigma^{-1} (mu - r e).
LeverageVector full_kelly(const GbmParams& params, const MarketConfig& market);

/// alpha * k*. alpha must be >= 0.
LeverageVector fractional_kelly(const GbmParams& params,
                                const MarketConfig& market, double alpha);

/// Maximizes L(k) subject to sum(k) = kappa0:
///   lambda = (e' Sigma^{-1} (mu - r e) - kappa0) / (e' Sigma^{-1} e)
///   k      = Sigma^{-1} (mu - r e - lambda e)
/// With r = 0 this is the classical equality-constrained mean-variance
/// solution; nonzero r generalizes it by working in excess drift.
ConstrainedSolution constrained_kelly(const GbmParams& params,
                                      const MarketConfig& market,
                                      double kappa0);

/// Profile at the growth optimum: L = r + S^2/2, V = S^2, alpha = 1.
GrowthProfile optimal_growth(const GbmParams& params,
                             const MarketConfig& market);

/// The Kelly-fraction diagnostic: if k is a scalar multiple of full Kelly
/// (componentwise, relative tolerance 1e-6 with absolute floor 1e-12 for
/// near-zero components), returns that scalar; otherwise absent. Absence is
/// a value, not an error: the ratio is only defined on the full-Kelly ray.
std::optional<double> kelly_fraction_estimate(const LeverageVector& k,
                                              const GbmParams& params,
                                              const MarketConfig& market);

}  // namespace kelly

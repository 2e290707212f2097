#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace kelly {

/// Neumaier-compensated accumulator. Column statistics must not depend on
/// summation order, so every mean/variance accumulation in the toolkit goes
/// through this.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("mean of empty sample");
    }
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value() / static_cast<double>(xs.size());
}

/// Two-pass sample variance with divisor (n - 1).
inline double compensated_variance(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw std::invalid_argument("variance needs at least 2 observations");
    }
    const double mean = compensated_mean(xs);
    CompensatedSum s;
    for (double x : xs) {
        const double d = x - mean;
        s.add(d * d);
    }
    return s.value() / static_cast<double>(xs.size() - 1);
}

}  // namespace kelly

#pragma once

#include <stdexcept>
#include <string>

namespace kelly {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV rows, JSON documents, date strings).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Numeric-domain failures: covariance not positive definite, ruin-only
/// simulations, non-invertible fund summaries.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Cholesky factorization hit a non-positive pivot. `pivot()` is the
/// zero-based column index; the failing leading minor has order pivot()+1.
class NotPositiveDefiniteError : public NumericError {
public:
    NotPositiveDefiniteError(const std::string& what, int pivot)
        : NumericError(what), pivot_(pivot) {}

    int pivot() const noexcept { return pivot_; }

private:
    int pivot_;
};

/// Filesystem-level failures (open, write, rename).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace kelly

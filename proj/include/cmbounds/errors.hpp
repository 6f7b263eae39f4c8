#ifndef CMBOUNDS_ERRORS_HPP
#define CMBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmbounds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input vectors disagree on length, or too few markets.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A share vector is too far from the probability simplex to repair.
struct NotASimplexPoint : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

// The all-pairs shortest path pass found a negative cycle and the caller
// did not ask to proceed anyway.
struct CyclicMonotonicityViolated : Error {
    CyclicMonotonicityViolated(const std::string& msg, double slack)
        : Error(msg), min_cycle_slack(slack) {}
    double min_cycle_slack;
};

// Brute-force cycle enumeration refused to run (factorial blow-up).
struct InstanceTooLarge : Error {
    using Error::Error;
};

// Covariance matrix is not symmetric positive definite.
struct CholeskyFailure : Error {
    using Error::Error;
};

// Malformed input file (data or config).
struct ParseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace cmbounds

#endif

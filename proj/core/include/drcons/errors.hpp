#pragma once

#include <stdexcept>
#include <string>

namespace drcons {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations: bad dimensions, non-finite entries, invalid
// parameter values.
struct InvalidInputError : Error {
    using Error::Error;
};

// Numeric failures past the preconditions: lost positivity in a
// factorization, indefinite quadratics, rank-deficient regressions.
struct NumericError : Error {
    using Error::Error;
};

// Least-squares design not identifiable (rank check failed).
struct IdentifiabilityError : NumericError {
    using NumericError::NumericError;
};

// A closed-loop simulation exceeded the instability abort threshold.
struct DivergedError : Error {
    DivergedError(const std::string& msg, long step, double state_norm)
        : Error(msg), step(step), state_norm(state_norm) {}
    long step;
    double state_norm;
};

}  // namespace drcons

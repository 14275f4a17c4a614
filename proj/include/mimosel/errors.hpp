#pragma once

#include <stdexcept>
#include <string>

namespace mimosel {

/// Invalid system parameters or malformed run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed to converge within its budget.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The estimated-channel Gram matrix is too ill conditioned to invert.
class IllConditionedError : public std::runtime_error {
public:
    explicit IllConditionedError(double condition)
        : std::runtime_error("Gram matrix condition number " + std::to_string(condition) +
                             " exceeds the inversion limit"),
          condition_(condition) {}

    double condition() const { return condition_; }

private:
    double condition_;
};

} // namespace mimosel

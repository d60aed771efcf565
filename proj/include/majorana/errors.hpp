#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

/// Adaptive integration ran out of subdivisions before reaching the requested tolerance.
/// Carries the best estimate so callers can still report it.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), value_(best_value), error_(best_error) {}

    double value() const noexcept { return value_; }
    double error() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

/// S_y + S_p fell below 1 + ln(pi) by more than the numerical tolerance.
class BoundViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Partition series needed more terms than the budget allows.
class TruncationBudget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace majorana

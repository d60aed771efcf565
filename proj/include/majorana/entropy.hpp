#pragma once

#include <cstddef>

#include "majorana/constants.hpp"
#include "majorana/quadrature.hpp"
#include "majorana/spinor.hpp"

namespace majorana {

inline constexpr double kDefaultTheta = 0.78539816339744830962; // pi/4: sin^2 = cos^2 = 1/2

struct EntropyOptions {
    double tol = 1e-10;
    double tail_tol = 1e-12;
    std::size_t max_subdivisions = std::size_t{1} << 20;
};

struct EntropyReport {
    int n = 0;
    double omega = 0.0;
    double theta = 0.0;
    double S_y = 0.0;
    double S_p = 0.0;
    double sum = 0.0;
    double bbm_bound = kBbmBound;
    double quad_err = 0.0;

    /// Sum below the bound by more than `slack`.
    bool violates_bound(double slack = 1e-6) const { return sum < bbm_bound - slack; }
};

/// -int rho ln rho over the requested space, with the error estimate of the quadrature.
IntegrationResult shannon_entropy(int n, double omega, double theta, Space space, const EntropyOptions& opts = {});

/// S_y in nats.
double shannon_position(int n, double omega, double theta = kDefaultTheta, const EntropyOptions& opts = {});
/// S_p in nats.
double shannon_momentum(int n, double omega, double theta = kDefaultTheta, const EntropyOptions& opts = {});

/// Pointwise rho ln rho (no leading minus: S = -int of this).
double entropic_density(int n, double omega, double theta, double coord, Space space);

/// Both entropies, their sum and the bound. Never throws on a violation; see bbm_report.
EntropyReport entropy_report(int n, double omega, double theta = kDefaultTheta, const EntropyOptions& opts = {});

/// entropy_report, throwing BoundViolation when the sum drops below 1 + ln(pi) - 1e-6.
EntropyReport bbm_report(int n, double omega, double theta = kDefaultTheta, const EntropyOptions& opts = {});

} // namespace majorana

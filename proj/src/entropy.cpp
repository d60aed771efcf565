#include "majorana/entropy.hpp"

#include <cstdio>
#include <string>

#include "majorana/errors.hpp"

namespace majorana {

IntegrationResult shannon_entropy(int n, double omega, double theta, Space space, const EntropyOptions& opts) {
    SpinorState{n, omega, 0.0}.validate();
    const double freq = space == Space::Position ? omega : 1.0 / omega;
    IntegrationSpec spec;
    spec.target_abs_tol = opts.tol;
    spec.max_subdivisions = opts.max_subdivisions;
    // rho |ln rho| grows like y^2 rho in the tails, one degree above the density itself.
    spec.truncation_radius = truncation_radius(freq, n + 1, opts.tail_tol);
    auto integrand = [&](double coord) {
        return -xlogx(position_spinor_at_phase(n, freq, theta, coord).density());
    };
    return integrate(integrand, spec);
}

double shannon_position(int n, double omega, double theta, const EntropyOptions& opts) {
    return shannon_entropy(n, omega, theta, Space::Position, opts).value;
}

double shannon_momentum(int n, double omega, double theta, const EntropyOptions& opts) {
    return shannon_entropy(n, omega, theta, Space::Momentum, opts).value;
}

double entropic_density(int n, double omega, double theta, double coord, Space space) {
    return xlogx(density_at_phase(n, omega, theta, coord, space));
}

EntropyReport entropy_report(int n, double omega, double theta, const EntropyOptions& opts) {
    const auto sy = shannon_entropy(n, omega, theta, Space::Position, opts);
    const auto sp = shannon_entropy(n, omega, theta, Space::Momentum, opts);
    EntropyReport report;
    report.n = n;
    report.omega = omega;
    report.theta = theta;
    report.S_y = sy.value;
    report.S_p = sp.value;
    report.sum = sy.value + sp.value;
    report.quad_err = sy.error + sp.error;
    return report;
}

EntropyReport bbm_report(int n, double omega, double theta, const EntropyOptions& opts) {
    auto report = entropy_report(n, omega, theta, opts);
    if (report.violates_bound()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "entropy sum %.12g below 1 + ln(pi) for n=%d omega=%.6g theta=%.6g",
                      report.sum, n, omega, theta);
        throw BoundViolation(buf);
    }
    return report;
}

} // namespace majorana

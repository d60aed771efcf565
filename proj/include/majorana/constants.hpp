#pragma once

#include <stdexcept>

namespace majorana {

/// Unit conventions. Natural units (all 1) unless overridden.
struct PhysicalConstants {
    double c = 1.0;
    double hbar = 1.0;
    double k_B = 1.0;

    void validate() const {
        if (!(c > 0.0) || !(hbar > 0.0) || !(k_B > 0.0))
            throw std::invalid_argument("physical constants must be strictly positive");
    }
};

/// Linear potential V(x) = k x acting on a particle of mass m.
struct PotentialParams {
    double k = 0.2;
    double m = 0.0;

    void validate() const {
        if (!(k > 0.0)) throw std::invalid_argument("potential slope k must be > 0");
        if (!(m >= 0.0)) throw std::invalid_argument("mass must be >= 0");
    }

    /// omega = k / (c hbar)
    double omega(const PhysicalConstants& pc) const { return k / (pc.c * pc.hbar); }

    /// Shifted coordinate y = x + m c^2 / k, the native coordinate of the eigenfunctions.
    double to_y(double x, const PhysicalConstants& pc) const { return x + m * pc.c * pc.c / k; }
    double to_x(double y, const PhysicalConstants& pc) const { return y - m * pc.c * pc.c / k; }
};

/// Entropic uncertainty bound 1 + ln(pi) in one dimension.
inline constexpr double kBbmBound = 1.0 + 1.1447298858494002; // 1 + ln(pi)

} // namespace majorana

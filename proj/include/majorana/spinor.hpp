#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "majorana/constants.hpp"
#include "majorana/hermite.hpp"

namespace majorana {

enum class Branch { Positive = 1, Negative = -1 };
enum class Space { Position, Momentum };

/// Stationary label of a Majorana spinor: level n, frequency omega = k/(c hbar), initial phase Omega.
struct SpinorState {
    int n = 0;
    double omega = 0.2;
    double Omega = 0.0;

    void validate() const {
        if (n < 0) throw std::domain_error("spinor level n must be >= 0");
        detail::check_omega(omega);
    }
};

/// Two components (psi_1, psi_2). Real in position space, carry powers of i in momentum space.
template <typename Scalar = double>
struct SpinorValue {
    std::complex<Scalar> upper;
    std::complex<Scalar> lower;

    Scalar density() const { return std::norm(upper) + std::norm(lower); }
};

/// E_n = branch * sqrt(2 c hbar k n). The n = 0 level is zero on both branches.
inline double energy(int n, const PotentialParams& pp, const PhysicalConstants& pc,
                     Branch branch = Branch::Positive) {
    if (n < 0) throw std::domain_error("energy: n must be >= 0");
    if (n == 0) return 0.0;
    return static_cast<double>(static_cast<int>(branch)) * std::sqrt(2.0 * pc.c * pc.hbar * pp.k * n);
}

/// Same spectrum expressed through omega: E_n = c hbar sqrt(2 omega n).
inline double energy_from_omega(int n, double omega, const PhysicalConstants& pc) {
    if (n < 0) throw std::domain_error("energy: n must be >= 0");
    return pc.c * pc.hbar * std::sqrt(2.0 * omega * n);
}

/// theta_n(t) = sqrt(2 omega n) c t + Omega.
inline double phase(const SpinorState& state, double t, const PhysicalConstants& pc) {
    state.validate();
    return std::sqrt(2.0 * state.omega * state.n) * pc.c * t + state.Omega;
}

/// Position-space spinor at a given phase theta:
///   upper = phi_n(y) sin(theta),  lower = phi_{n-1}(y) cos(theta),
/// which is the same as the sqrt(2n) H_{n-1} form once normalizations are collected.
/// Level 0 is the time-independent (phi_0, 0).
template <typename Scalar>
SpinorValue<Scalar> position_spinor_at_phase(int n, Scalar omega, Scalar theta, Scalar y) {
    if (n < 0) throw std::domain_error("spinor level n must be >= 0");
    if (n == 0) return {hermite_function(0, omega, y), Scalar(0)};
    const auto [phi_n, phi_below] = hermite_function_pair(HermiteOrder(n), omega, y);
    return {phi_n * std::sin(theta), phi_below * std::cos(theta)};
}

/// Momentum-space spinor, transform convention (2 pi)^{-1/2} int psi(y) e^{i p y} dy.
/// A Hermite function of frequency omega maps to i^n times the one of frequency 1/omega.
template <typename Scalar>
SpinorValue<Scalar> momentum_spinor_at_phase(int n, Scalar omega, Scalar theta, Scalar p) {
    if (n < 0) throw std::domain_error("spinor level n must be >= 0");
    detail::check_omega(static_cast<double>(omega));
    const Scalar inv = Scalar(1) / omega;
    auto i_pow = [](int k) {
        switch (((k % 4) + 4) % 4) {
        case 0: return std::complex<Scalar>(1, 0);
        case 1: return std::complex<Scalar>(0, 1);
        case 2: return std::complex<Scalar>(-1, 0);
        default: return std::complex<Scalar>(0, -1);
        }
    };
    if (n == 0) return {hermite_function(0, inv, p), Scalar(0)};
    const auto [phi_n, phi_below] = hermite_function_pair(HermiteOrder(n), inv, p);
    return {i_pow(n) * (phi_n * std::sin(theta)), i_pow(n - 1) * (phi_below * std::cos(theta))};
}

inline SpinorValue<double> position_spinor(const SpinorState& state, double y, double t,
                                           const PhysicalConstants& pc) {
    return position_spinor_at_phase(state.n, state.omega, phase(state, t, pc), y);
}

inline SpinorValue<double> momentum_spinor(const SpinorState& state, double p, double t,
                                           const PhysicalConstants& pc) {
    return momentum_spinor_at_phase(state.n, state.omega, phase(state, t, pc), p);
}

/// |psi_1|^2 + |psi_2|^2 at phase theta.
template <typename Scalar>
Scalar density_at_phase(int n, Scalar omega, Scalar theta, Scalar coord, Space space) {
    detail::check_omega(static_cast<double>(omega));
    // |phi_n(p; 1/omega)| is the momentum-space magnitude; the powers of i drop out.
    const Scalar freq = space == Space::Position ? omega : Scalar(1) / omega;
    return position_spinor_at_phase(n, freq, theta, coord).density();
}

inline double probability_density(const SpinorState& state, double coord, double t, Space space,
                                   const PhysicalConstants& pc) {
    return density_at_phase(state.n, state.omega, phase(state, t, pc), coord, space);
}

/// Density over a grid of coordinates.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
density_on_grid(int n, typename Derived::Scalar omega, typename Derived::Scalar theta,
                const Eigen::ArrayBase<Derived>& coords, Space space) {
    using Scalar = typename Derived::Scalar;
    if (n < 0) throw std::domain_error("spinor level n must be >= 0");
    detail::check_omega(static_cast<double>(omega));
    const Scalar freq = space == Space::Position ? omega : Scalar(1) / omega;
    const auto table = hermite_function_table(HermiteOrder(n), freq, coords);
    if (n == 0) return table.row(0).square().transpose();
    const Scalar s = std::sin(theta), c = std::cos(theta);
    return (table.row(n).square() * (s * s) + table.row(n - 1).square() * (c * c)).transpose();
}

// Supersymmetric ladder. In the shifted coordinate the superpotential is W(y) = k y = c hbar omega y, so
//   A        =  c hbar d/dy + k y
//   A^dagger = -c hbar d/dy + k y
// and H_- = A^dagger A, H_+ = A A^dagger with V_-/+ = (k y)^2 -/+ c hbar k.

/// A phi_n(y) with the derivative taken analytically.
inline double apply_annihilator(int n, double omega, double y, const PhysicalConstants& pc) {
    const double chb = pc.c * pc.hbar;
    return chb * hermite_function_derivative(n, omega, y) + chb * omega * y * hermite_function(n, omega, y);
}

/// A^dagger phi_n(y).
inline double apply_creator(int n, double omega, double y, const PhysicalConstants& pc) {
    const double chb = pc.c * pc.hbar;
    return -chb * hermite_function_derivative(n, omega, y) + chb * omega * y * hermite_function(n, omega, y);
}

/// A phi_{(n+1)-} / E_{n+1}: maps the minus-sector level n+1 onto its plus-sector partner.
/// `state.n` is the level being lowered, so it must be >= 1.
inline double ladder_down(const SpinorState& state, double y, const PhysicalConstants& pc) {
    state.validate();
    if (state.n == 0)
        throw std::domain_error("ladder_down: the zero mode is annihilated by A (E_0 = 0)");
    return apply_annihilator(state.n, state.omega, y, pc) / energy_from_omega(state.n, state.omega, pc);
}

/// A^dagger phi_{n+} / E_{n+1}: maps the plus-sector level back onto the minus-sector level n+1.
inline double ladder_up(const SpinorState& state, double y, const PhysicalConstants& pc) {
    state.validate();
    return apply_creator(state.n, state.omega, y, pc) / energy_from_omega(state.n + 1, state.omega, pc);
}

} // namespace majorana

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace majorana {

/// Quantum number of a Hermite polynomial / Hermite function. Always n >= 0.
class HermiteOrder {
public:
    constexpr HermiteOrder(int n) : n_(n) {
        if (n < 0) throw std::domain_error("Hermite order must be non-negative");
    }
    constexpr int value() const noexcept { return n_; }
    constexpr operator int() const noexcept { return n_; }

private:
    int n_;
};

/// Physicists' Hermite polynomial H_n(x) by the upward three-term recurrence
///   H_{k+1} = 2x H_k - 2k H_{k-1}.
/// Throws std::overflow_error when the value leaves the representable range.
template <typename Scalar>
Scalar hermite(HermiteOrder order, Scalar x) {
    if (!std::isfinite(x)) throw std::domain_error("hermite: non-finite argument");
    const int n = order.value();
    Scalar prev = Scalar(1);
    if (n == 0) return prev;
    Scalar cur = Scalar(2) * x;
    for (int k = 1; k < n; ++k) {
        const Scalar next = Scalar(2) * x * cur - Scalar(2 * k) * prev;
        prev = cur;
        cur = next;
        if (!std::isfinite(cur))
            throw std::overflow_error("hermite: H_" + std::to_string(n) + " overflows at x = " +
                                      std::to_string(static_cast<double>(x)));
    }
    return cur;
}

namespace detail {

// phi_0 for frequency omega at y, i.e. (omega/pi)^{1/4} exp(-omega y^2 / 2).
template <typename Scalar>
Scalar gaussian_ground(Scalar omega, Scalar y) {
    using std::exp;
    using std::pow;
    return pow(omega / std::numbers::pi_v<Scalar>, Scalar(0.25)) * exp(-omega * y * y / Scalar(2));
}

inline void check_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::domain_error("omega must be finite and > 0");
}

} // namespace detail

/// (phi_n(y), phi_{n-1}(y)) in one pass; the second entry is 0 for n = 0.
template <typename Scalar>
std::pair<Scalar, Scalar> hermite_function_pair(HermiteOrder order, Scalar omega, Scalar y) {
    detail::check_omega(static_cast<double>(omega));
    if (!std::isfinite(y)) throw std::domain_error("hermite_function: non-finite argument");
    const int n = order.value();
    const Scalar xi = std::sqrt(omega) * y;
    Scalar prev = detail::gaussian_ground(omega, y);
    if (n == 0) return {prev, Scalar(0)};
    Scalar cur = std::sqrt(Scalar(2)) * xi * prev;
    for (int k = 1; k < n; ++k) {
        const Scalar next = std::sqrt(Scalar(2) / Scalar(k + 1)) * xi * cur -
                            std::sqrt(Scalar(k) / Scalar(k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

/// L2-normalized Hermite function
///   phi_n(y) = (omega/pi)^{1/4} / sqrt(2^n n!) exp(-omega y^2/2) H_n(sqrt(omega) y).
/// The normalization travels inside the recurrence
///   phi_{k+1} = sqrt(2/(k+1)) xi phi_k - sqrt(k/(k+1)) phi_{k-1},   xi = sqrt(omega) y,
/// so no factorial or power of two is ever formed and magnitudes stay O(1).
template <typename Scalar>
Scalar hermite_function(HermiteOrder order, Scalar omega, Scalar y) {
    return hermite_function_pair(order, omega, y).first;
}

/// phi_0 .. phi_{n_max} at a single point.
template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> hermite_functions(HermiteOrder n_max, Scalar omega, Scalar y) {
    detail::check_omega(static_cast<double>(omega));
    const int n = n_max.value();
    Eigen::Array<Scalar, Eigen::Dynamic, 1> out(n + 1);
    const Scalar xi = std::sqrt(omega) * y;
    out(0) = detail::gaussian_ground(omega, y);
    if (n >= 1) out(1) = std::sqrt(Scalar(2)) * xi * out(0);
    for (int k = 1; k < n; ++k)
        out(k + 1) = std::sqrt(Scalar(2) / Scalar(k + 1)) * xi * out(k) -
                     std::sqrt(Scalar(k) / Scalar(k + 1)) * out(k - 1);
    return out;
}

/// Table of Hermite functions over a grid: row k holds phi_k(y_j).
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
hermite_function_table(HermiteOrder n_max, typename Derived::Scalar omega,
                       const Eigen::ArrayBase<Derived>& y) {
    using Scalar = typename Derived::Scalar;
    detail::check_omega(static_cast<double>(omega));
    const int n = n_max.value();
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> table(n + 1, y.size());
    const auto xi = (std::sqrt(omega) * y).eval();
    table.row(0) = (std::pow(omega / std::numbers::pi_v<Scalar>, Scalar(0.25)) *
                    (-omega * y.square() / Scalar(2)).exp())
                       .transpose();
    if (n >= 1) table.row(1) = std::sqrt(Scalar(2)) * xi.transpose() * table.row(0);
    for (int k = 1; k < n; ++k)
        table.row(k + 1) = std::sqrt(Scalar(2) / Scalar(k + 1)) * xi.transpose() * table.row(k) -
                           std::sqrt(Scalar(k) / Scalar(k + 1)) * table.row(k - 1);
    return table;
}

/// d/dy phi_n(y) = -omega y phi_n(y) + sqrt(2 n omega) phi_{n-1}(y), from H_n' = 2n H_{n-1}.
template <typename Scalar>
Scalar hermite_function_derivative(HermiteOrder order, Scalar omega, Scalar y) {
    const int n = order.value();
    const auto [value, below] = hermite_function_pair(order, omega, y);
    return -omega * y * value + std::sqrt(Scalar(2 * n) * omega) * below;
}

} // namespace majorana

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "majorana/errors.hpp"

namespace majorana {

struct IntegrationSpec {
    double target_abs_tol = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 20;
    double truncation_radius = 10.0;
    /// Equal panels the interval is cut into before adaptive bisection starts.
    int initial_panels = 16;

    void validate() const {
        if (!(target_abs_tol > 0.0)) throw std::invalid_argument("integration tolerance must be > 0");
        if (!(truncation_radius > 0.0)) throw std::invalid_argument("truncation radius must be > 0");
        if (initial_panels < 1) throw std::invalid_argument("initial_panels must be >= 1");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t subdivisions = 0;
};

namespace gk15 {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for nodes[1], nodes[3], nodes[5], nodes[7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

} // namespace gk15

/// One 15-point Kronrod estimate on [a, b]; `error` is |K15 - G7|.
template <typename F>
IntegrationResult gauss_kronrod_15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);
    double kronrod = f_center * gk15::kronrod_weights[7];
    double gauss = f_center * gk15::gauss_weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * gk15::nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += gk15::kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gk15::gauss_weights[j / 2] * pair;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half), 1};
}

/// Globally adaptive Gauss-Kronrod on [a, b]: the panel with the largest error estimate is bisected
/// until the summed estimate drops below `abs_tol`. Evaluation order is fixed, so results are
/// bit-reproducible. Throws NonConvergence (with the best estimate) when the budget runs out.
template <typename F>
IntegrationResult integrate(F&& f, double a, double b, double abs_tol,
                            std::size_t max_subdivisions = std::size_t{1} << 20, int initial_panels = 16) {
    if (!(b > a)) throw std::invalid_argument("integrate: require a < b");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be > 0");

    struct Panel {
        double a, b, value, error;
        bool operator<(const Panel& other) const { return error < other.error; }
    };
    std::priority_queue<Panel> queue;
    std::vector<Panel> frozen;  // too narrow to split further
    double total_error = 0.0;
    const double width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * width;
        const double hi = i + 1 == initial_panels ? b : a + (i + 1) * width;
        const auto r = gauss_kronrod_15(f, lo, hi);
        queue.push({lo, hi, r.value, r.error});
        total_error += r.error;
    }

    std::size_t subdivisions = 0;
    while (total_error > abs_tol && !queue.empty()) {
        if (subdivisions >= max_subdivisions) break;
        const Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(mid), 1.0)) {
            queue.pop();
            frozen.push_back(worst);
            continue;
        }
        queue.pop();
        const auto left = gauss_kronrod_15(f, worst.a, mid);
        const auto right = gauss_kronrod_15(f, mid, worst.b);
        queue.push({worst.a, mid, left.value, left.error});
        queue.push({mid, worst.b, right.value, right.error});
        total_error += left.error + right.error - worst.error;
        ++subdivisions;
    }

    // Re-sum from scratch, left to right, so the running updates above leave no drift.
    std::vector<Panel> panels = std::move(frozen);
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    IntegrationResult result;
    for (const auto& p : panels) {
        result.value += p.value;
        result.error += p.error;
    }
    result.subdivisions = subdivisions;
    if (!std::isfinite(result.value))
        throw NonConvergence("integrate: non-finite integrand value", result.value, result.error);
    if (result.error > abs_tol) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "integrate: subdivision budget exhausted (error %.3g > tolerance %.3g)",
                      result.error, abs_tol);
        throw NonConvergence(msg, result.value, result.error);
    }
    return result;
}

/// Integral over the symmetric truncated domain [-R, R] described by `spec`.
template <typename F>
IntegrationResult integrate(F&& f, const IntegrationSpec& spec) {
    spec.validate();
    return integrate(std::forward<F>(f), -spec.truncation_radius, spec.truncation_radius, spec.target_abs_tol,
                     spec.max_subdivisions, spec.initial_panels);
}

/// Half-width R beyond which exp(-omega y^2) times a degree-2n polynomial has a tail below `tail_tol`:
/// R = 2 sqrt((W + (n + 2) ln(W + e)) / omega), W = -ln(tail_tol).
inline double truncation_radius(double omega, int n, double tail_tol = 1e-12) {
    if (!(omega > 0.0)) throw std::domain_error("truncation_radius: omega must be > 0");
    if (n < 0) throw std::domain_error("truncation_radius: n must be >= 0");
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw std::domain_error("truncation_radius: tail_tol must be in (0, 1)");
    const double w = -std::log(tail_tol);
    return 2.0 * std::sqrt((w + (n + 2) * std::log(w + std::numbers::e)) / omega);
}

/// v ln v, continuously extended by 0 at v = 0.
inline double xlogx(double v) {
    if (v < 0.0 || std::isnan(v)) throw std::domain_error("xlogx: argument must be >= 0");
    return v == 0.0 ? 0.0 : v * std::log(v);
}

} // namespace majorana

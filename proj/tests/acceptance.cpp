// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "figure_checks.hpp"
#include "majorana/entropy.hpp"
#include "majorana/quadrature.hpp"
#include "majorana/spinor.hpp"
#include "majorana/thermo.hpp"
#include "oracles.hpp"

using namespace majorana;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the worst deviation seen against a threshold.
struct Worst {
    double value = 0.0;
    void add(double v) { value = std::max(value, std::isnan(v) ? INFINITY : v); }
    Outcome below(double limit) const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "max deviation %.3g (limit %.3g)", value, limit);
        return {value < limit, buf};
    }
};

Outcome table_reproduction() {
    struct Row { int n; double omega, s_y, s_p; };
    static constexpr std::array<Row, 12> table{{
        {0, 0.2, 1.87708, 0.26765}, {0, 0.4, 1.53051, 0.61422}, {0, 0.8, 1.18394, 0.96079},
        {1, 0.2, 2.19246, 0.58302}, {1, 0.4, 1.84588, 0.92959}, {1, 0.8, 1.49931, 1.27617},
        {2, 0.2, 2.39707, 0.78763}, {2, 0.4, 2.05049, 1.13420}, {2, 0.8, 1.70392, 1.48078},
        {3, 0.2, 2.52764, 0.91820}, {3, 0.4, 2.18107, 1.26477}, {3, 0.8, 1.83449, 1.61135},
    }};
    static constexpr std::array<double, 4> sums{2.14473, 2.77548, 3.18469, 3.44584};
    Worst worst;
    for (const auto& row : table) {
        const auto r = entropy_report(row.n, row.omega, kPi / 4);
        worst.add(std::abs(r.S_y - row.s_y));
        worst.add(std::abs(r.S_p - row.s_p));
        worst.add(std::abs(r.sum - sums[row.n]));
    }
    return worst.below(2e-4);
}

Outcome bbm_saturation() {
    Worst worst;
    for (int i = 0; i <= 40; ++i) {
        const double omega = 0.05 * std::pow(100.0, i / 40.0);
        worst.add(std::abs(shannon_position(0, omega) + shannon_momentum(0, omega) - (1.0 + std::log(kPi))));
    }
    return worst.below(1e-8);
}

Outcome scaling_invariance() {
    Worst worst;
    for (int n = 0; n <= 5; ++n)
        for (double omega : {0.1, 0.2, 0.4, 1.3})
            worst.add(std::abs(shannon_position(n, 2 * omega) - shannon_position(n, omega) + 0.5 * std::log(2.0)));
    return worst.below(1e-6);
}

Outcome closed_form_oracle() {
    Worst worst;
    for (double omega : {0.05, 0.2, 0.4, 0.8, 1.0, 2.5, 5.0}) {
        worst.add(std::abs(shannon_position(0, omega) - oracle::gaussian_entropy(omega)));
        worst.add(std::abs(shannon_momentum(0, omega) - oracle::gaussian_entropy(1.0 / omega)));
    }
    return worst.below(1e-8);
}

Outcome normalization() {
    Worst worst;
    for (int n = 0; n <= 8; ++n)
        for (double omega : {0.2, 0.8})
            for (double theta : {0.0, kPi / 6, kPi / 4, kPi / 2, 2.0}) {
                IntegrationSpec spec;
                spec.target_abs_tol = 1e-12;
                spec.truncation_radius = truncation_radius(omega, n);
                const double mass =
                    integrate([&](double y) { return density_at_phase(n, omega, theta, y, Space::Position); }, spec).value;
                worst.add(std::abs(mass - 1.0));
            }
    return worst.below(1e-8);
}

std::complex<double> fourier(const std::function<double(double)>& f, double p, double radius) {
    const IntegrationSpec spec{1e-12, std::size_t{1} << 20, radius, 32};
    const double re = integrate([&](double y) { return f(y) * std::cos(p * y); }, spec).value;
    const double im = integrate([&](double y) { return f(y) * std::sin(p * y); }, spec).value;
    return std::complex<double>(re, im) / std::sqrt(2.0 * kPi);
}

Outcome fourier_transform() {
    Worst worst;
    const double theta = 0.7;
    for (double omega : {0.2, 0.8})
        for (int n = 0; n <= 6; ++n) {
            const double radius = truncation_radius(omega, n);
            const double p_max = 4.0 / std::sqrt(omega);
            for (int j = -20; j <= 20; ++j) {
                const double p = p_max * j / 20.0;
                const auto upper = fourier([&](double y) { return position_spinor_at_phase(n, omega, theta, y).upper.real(); }, p, radius);
                const auto lower = fourier([&](double y) { return position_spinor_at_phase(n, omega, theta, y).lower.real(); }, p, radius);
                const auto analytic = momentum_spinor_at_phase(n, omega, theta, p);
                worst.add(std::abs(upper - analytic.upper));
                worst.add(std::abs(lower - analytic.lower));
            }
        }
    return worst.below(1e-6);
}

Outcome ladder_intertwining() {
    Worst worst;
    for (const PhysicalConstants pc : {PhysicalConstants{}, PhysicalConstants{1.5, 0.7, 1.0}})
        for (double omega : {0.2, 0.4, 0.8})
            for (int n = 0; n <= 8; ++n)
                for (int j = -240; j <= 240; ++j) {
                    const double y = (6.0 * j / 240.0) / std::sqrt(omega);
                    worst.add(std::abs(apply_annihilator(n + 1, omega, y, pc) -
                                       energy_from_omega(n + 1, omega, pc) * hermite_function(n, omega, y)));
                }
    return worst.below(1e-8);
}

Outcome thermodynamic_limits() {
    std::ostringstream detail;
    bool pass = true;
    const PhysicalConstants pc{};
    for (double k : {0.2, 0.4, 0.8}) {
        for (int N : {1, 3}) {
            const thermo::EnsembleParams hot{1e-3, k, N, pc};
            const double plateau = thermo::heat_capacity(hot) / (N * pc.k_B);
            if (!(std::abs(plateau - 2.0) < 1e-3)) {
                pass = false;
                detail << "C_V/(N k_B)=" << plateau << " at k=" << k << "; ";
            }
        }
    }
    const std::array<double, 3> ks{0.2, 0.4, 0.8};
    const auto rows = thermo::thermo_sweep(ks, thermo::TemperatureRange{}, 1, pc);
    double identity = 0.0;
    int monotone_breaks = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& em = rows[i].em;
        identity = std::max(identity, std::abs(em.F + rows[i].T * em.S - em.U) / std::max(1.0, std::abs(em.U)));
        if (i == 0 || rows[i].k != rows[i - 1].k) continue;
        const auto& prev = rows[i - 1];
        if (!(rows[i].exact.F < prev.exact.F) || !(rows[i].exact.U > prev.exact.U)) ++monotone_breaks;
        const bool weak = pc.c * pc.hbar * rows[i].k * rows[i].beta * rows[i].beta <= 0.1;
        if (weak && (!(em.F < prev.em.F) || !(em.U > prev.em.U))) ++monotone_breaks;
    }
    if (identity > 1e-13) {
        pass = false;
        detail << "F+TS-U relative residual " << identity << "; ";
    }
    if (monotone_breaks > 0) {
        pass = false;
        detail << monotone_breaks << " monotonicity breaks; ";
    }
    detail << "plateau, identity residual " << identity << ", " << rows.size() << " sweep points";
    return {pass, detail.str()};
}

Outcome euler_maclaurin() {
    Worst worst;
    const PhysicalConstants pc{};
    int points = 0;
    for (double k : {0.05, 0.2, 0.4, 0.8, 2.0})
        for (int i = 0; i <= 30; ++i) {
            const double coupling = 1e-5 * std::pow(1e3, i / 30.0);
            const thermo::EnsembleParams ep{std::sqrt(coupling / (pc.c * pc.hbar * k)), k, 1, pc};
            const double exact = thermo::partition_exact(ep).Z;
            worst.add(std::abs(thermo::partition_em(ep) - exact) / exact);
            ++points;
        }
    auto out = worst.below(0.01);
    out.detail += " over " + std::to_string(points) + " (beta, k) points";
    return out;
}

std::string render(const cli::Table& t, const cli::RunConfig& config) {
    std::ostringstream os;
    cli::write_table(os, t, config);
    return os.str();
}

// Every row has one value per column and every value is finite.
bool schema_valid(const cli::Table& t, const std::vector<std::string>& columns) {
    if (t.columns != columns || t.rows.empty()) return false;
    return std::all_of(t.rows.begin(), t.rows.end(), [&](const auto& row) {
        return row.size() == columns.size() && std::all_of(row.begin(), row.end(), [](double v) { return std::isfinite(v); });
    });
}

Outcome figure_data() {
    std::ostringstream detail;
    bool pass = true;
    auto fail = [&](const std::string& what) {
        pass = false;
        detail << what << "; ";
    };

    cli::RunConfig config;
    config.tsteps = 21;
    using Cmd = cli::Table (*)(const cli::RunConfig&);
    const std::vector<std::pair<Cmd, std::vector<std::string>>> commands{
        {cli::cmd_density, {"n", "omega", "y", "x", "rho"}},
        {cli::cmd_entropy_density, {"n", "omega", "y", "rho", "entropic_density"}},
        {cli::cmd_heatmap, {"y", "t", "rho"}},
        {cli::cmd_thermo, {"k", "T", "beta", "coupling", "Z_exact", "Z_em", "Z_rel_err", "F_em", "U_em", "S_em",
                           "Cv_em", "F_exact", "U_exact", "S_exact", "Cv_exact"}},
    };
    for (const auto& [cmd, columns] : commands) {
        for (cli::Format format : {cli::Format::Csv, cli::Format::Json}) {
            config.format = format;
            const auto first = cmd(config);
            if (!schema_valid(first, columns)) fail(first.command + " schema");
            if (render(first, config) != render(cmd(config), config)) fail(first.command + " not deterministic");
        }
    }
    config.format = cli::Format::Csv;

    double worst_mass = 0.0;
    for (int n : {0, 1, 2, 3}) {
        config.levels = {n};
        config.omegas = {0.2};
        const auto heat = cli::cmd_heatmap(config);
        const auto t_col = checks::column(heat, "t");
        std::vector<double> times;
        for (const auto& row : heat.rows)
            if (times.empty() || times.back() != row[t_col]) times.push_back(row[t_col]);
        for (double t : times)
            worst_mass = std::max(worst_mass, std::abs(checks::trapezoid(checks::series(heat, "t", t, "y", "rho")) - 1.0));
    }
    if (!(worst_mass < 1e-6)) fail("heatmap mass error " + std::to_string(worst_mass));

    int node_sets = 0;
    config.theta = kPi / 2;
    config.grid = 801;
    for (int n : {1, 2, 3, 4}) {
        for (double omega : {0.2, 0.4, 0.8}) {
            config.levels = {n};
            config.omegas = {omega};
            const auto t = cli::cmd_entropy_density(config);
            const auto curve = checks::series(t, "omega", omega, "y", "entropic_density");
            const double spacing = curve[1].first - curve[0].first;
            std::vector<double> expected;
            for (double r : checks::hermite_roots(n)) expected.push_back(r / std::sqrt(omega));
            // zeros of rho are zeros of -rho ln rho; between them sit the maxima of rho.
            const auto rho = checks::series(t, "omega", omega, "y", "rho");
            if (!checks::positions_match(checks::local_minima(rho), expected, spacing)) fail("node mismatch n=" + std::to_string(n));
            for (double root : expected) {
                const auto nearest = std::min_element(curve.begin(), curve.end(), [&](const auto& a, const auto& b) {
                    return std::abs(a.first - root) < std::abs(b.first - root);
                });
                if (std::abs(nearest->second) > 1e-2) fail("entropic density not vanishing at root, n=" + std::to_string(n));
            }
            ++node_sets;
        }
    }
    detail << "schema+determinism for 4 commands, heatmap mass error " << worst_mass << ", " << node_sets << " node sets";
    return {pass, detail.str()};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*check)();
    };
    const std::array<Criterion, 10> criteria{{
        {1, "entropy table reproduction", table_reproduction},
        {2, "BBM saturation at n = 0", bbm_saturation},
        {3, "scaling invariance in omega", scaling_invariance},
        {4, "Gaussian closed-form entropies", closed_form_oracle},
        {5, "normalization across phases", normalization},
        {6, "Fourier transform of spinors", fourier_transform},
        {7, "ladder intertwining", ladder_intertwining},
        {8, "thermodynamic limits and identities", thermodynamic_limits},
        {9, "Euler-Maclaurin partition accuracy", euler_maclaurin},
        {10, "figure data smoke tests", figure_data},
    }};
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("[%s] criterion %2d: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

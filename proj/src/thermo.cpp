#include "majorana/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "majorana/errors.hpp"

namespace majorana::thermo {

namespace {

// Integral of exp(-b sqrt(x)) from x = N to infinity.
double tail_integral(double b, double n) {
    const double s = b * std::sqrt(n);
    return 2.0 * (s + 1.0) * std::exp(-s) / (b * b);
}

// Smallest N whose tail integral is below tol.
std::size_t required_terms(double b, double tol, std::size_t budget) {
    if (tail_integral(b, 0.0) < tol) return 0;
    // The tail is decreasing in s = b sqrt(N); bracket then bisect on s.
    double lo = 0.0, hi = 1.0;
    while (2.0 * (hi + 1.0) * std::exp(-hi) / (b * b) >= tol) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (2.0 * (mid + 1.0) * std::exp(-mid) / (b * b) < tol ? hi : lo) = mid;
    }
    const double n = std::ceil((hi / b) * (hi / b));
    if (n > static_cast<double>(budget))
    {
        char msg[160];
        std::snprintf(msg, sizeof msg, "partition series needs ~%.3g terms (budget %zu); beta or k too small", n, budget);
        throw TruncationBudget(msg);
    }
    auto terms = static_cast<std::size_t>(n);
    while (terms > 0 && tail_integral(b, static_cast<double>(terms - 1)) < tol) --terms;
    while (tail_integral(b, static_cast<double>(terms)) >= tol) ++terms;
    return terms;
}

// sum_{n=0}^{last} exp(-b sqrt(n)), Neumaier-compensated.
double partial_sum(double b, std::size_t last) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t n = 0; n <= last; ++n) {
        const double term = std::exp(-b * std::sqrt(static_cast<double>(n)));
        const double t = sum + term;
        comp += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double level_spacing(const EnsembleParams& ep) { return std::sqrt(2.0 * ep.pc.c * ep.pc.hbar * ep.k); }

} // namespace

void EnsembleParams::validate() const {
    pc.validate();
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and > 0");
    if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("k must be finite and > 0");
    if (N < 1) throw std::invalid_argument("particle count N must be >= 1");
}

PartitionSum partition_exact(const EnsembleParams& ep, double tol, std::size_t budget) {
    ep.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("partition_exact: tol must be > 0");
    const double b = ep.beta * level_spacing(ep);
    const std::size_t last = required_terms(b, tol, budget);
    return {partial_sum(b, last), last, tail_integral(b, static_cast<double>(last))};
}

double partition_em(const EnsembleParams& ep) {
    ep.validate();
    return 0.5 + 1.0 / ep.coupling();
}

double helmholtz(const EnsembleParams& ep) {
    return -(ep.N / ep.beta) * std::log(partition_em(ep));
}

double mean_energy(const EnsembleParams& ep) {
    ep.validate();
    return 4.0 * ep.N / (ep.beta * (2.0 + ep.coupling()));
}

double entropy(const EnsembleParams& ep) {
    const double x = ep.coupling();
    return 4.0 * ep.N * ep.pc.k_B / (2.0 + x) + ep.N * ep.pc.k_B * std::log(partition_em(ep));
}

double heat_capacity(const EnsembleParams& ep) {
    ep.validate();
    const double x = ep.coupling();
    return 4.0 * ep.pc.k_B * ep.N * (2.0 + 3.0 * x) / ((2.0 + x) * (2.0 + x));
}

ThermoFunctions closed_form(const EnsembleParams& ep) {
    return {helmholtz(ep), mean_energy(ep), entropy(ep), heat_capacity(ep)};
}

ThermoFunctions exact_functions(const EnsembleParams& ep, double tol, std::size_t budget) {
    ep.validate();
    const double h = ep.beta * 1e-5;
    const double a = level_spacing(ep);
    // The lowest beta has the longest series; its truncation covers the other two points.
    const std::size_t last = required_terms((ep.beta - h) * a, tol, budget);
    const double ln_minus = std::log(partial_sum((ep.beta - h) * a, last));
    const double ln_mid = std::log(partial_sum(ep.beta * a, last));
    const double ln_plus = std::log(partial_sum((ep.beta + h) * a, last));
    const double d1 = (ln_plus - ln_minus) / (2.0 * h);
    const double d2 = (ln_plus - 2.0 * ln_mid + ln_minus) / (h * h);

    ThermoFunctions out;
    out.F = -(ep.N / ep.beta) * ln_mid;
    out.U = -ep.N * d1;
    out.S = ep.pc.k_B * (ep.N * ln_mid + ep.beta * out.U);
    out.C_V = ep.pc.k_B * ep.beta * ep.beta * ep.N * d2;
    return out;
}

ThermoReport thermo_report(const EnsembleParams& ep, double tol) {
    const auto z = partition_exact(ep, tol);
    ThermoReport r;
    r.k = ep.k;
    r.beta = ep.beta;
    r.T = 1.0 / (ep.pc.k_B * ep.beta);
    r.N = ep.N;
    r.Z_exact = z.Z;
    r.Z_em = partition_em(ep);
    r.em = closed_form(ep);
    r.exact = exact_functions(ep, tol);
    r.truncation_n = z.truncation_n;
    r.tail_bound = z.tail_bound;
    return r;
}

void TemperatureRange::validate() const {
    if (!(t_min > 0.0) || !(t_max >= t_min)) throw std::invalid_argument("temperature range must satisfy 0 < tmin <= tmax");
    if (steps < 1) throw std::invalid_argument("temperature steps must be >= 1");
    if (steps == 1 && t_max != t_min) throw std::invalid_argument("a single temperature step needs tmin == tmax");
}

std::vector<double> TemperatureRange::grid() const {
    validate();
    std::vector<double> ts(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        ts[static_cast<std::size_t>(i)] = steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
    return ts;
}

std::vector<ThermoReport> thermo_sweep(std::span<const double> k_values, const TemperatureRange& range, int N,
                                       const PhysicalConstants& pc, double tol) {
    const auto temps = range.grid();
    std::vector<ThermoReport> rows;
    rows.reserve(k_values.size() * temps.size());
    for (const double k : k_values)
        for (const double t : temps)
            rows.push_back(thermo_report({1.0 / (pc.k_B * t), k, N, pc}, tol));
    return rows;
}

} // namespace majorana::thermo

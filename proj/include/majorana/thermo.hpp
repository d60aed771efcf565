#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majorana/constants.hpp"

namespace majorana::thermo {

/// Canonical ensemble of N linear Majorana fermions at inverse temperature beta = 1/(k_B T).
struct EnsembleParams {
    double beta = 1.0;
    double k = 0.2;
    int N = 1;
    PhysicalConstants pc{};

    void validate() const;
    /// c hbar k beta^2, the small parameter of the closed-form partition function.
    double coupling() const { return pc.c * pc.hbar * k * beta * beta; }
};

struct PartitionSum {
    double Z = 0.0;
    std::size_t truncation_n = 0; ///< last level included
    double tail_bound = 0.0;      ///< upper bound on the omitted terms
};

inline constexpr std::size_t kDefaultTermBudget = 100'000'000;

/// Single-particle Z = sum_n exp(-beta sqrt(2 c hbar k n)) on the positive-energy branch, summed until
/// int_N^inf exp(-b sqrt(x)) dx = 2 (b sqrt(N) + 1) exp(-b sqrt(N)) / b^2 < tol.
/// Throws TruncationBudget if that needs more than `budget` terms.
PartitionSum partition_exact(const EnsembleParams& ep, double tol = 1e-10,
                             std::size_t budget = kDefaultTermBudget);

/// Euler-Maclaurin closed form Z ~ 1/2 + 1/(c hbar k beta^2); valid when the coupling is small.
double partition_em(const EnsembleParams& ep);

struct ThermoFunctions {
    double F = 0.0;
    double U = 0.0;
    double S = 0.0;
    double C_V = 0.0;
};

// Closed forms built on Z_N = partition_em^N.
double helmholtz(const EnsembleParams& ep);
double mean_energy(const EnsembleParams& ep);
double entropy(const EnsembleParams& ep);
double heat_capacity(const EnsembleParams& ep);
ThermoFunctions closed_form(const EnsembleParams& ep);

/// Same four functions from ln of the exact series, differentiated by central differences
/// with step h = beta * 1e-5. All three stencil points share one truncation count.
ThermoFunctions exact_functions(const EnsembleParams& ep, double tol = 1e-10,
                                std::size_t budget = kDefaultTermBudget);

struct ThermoReport {
    double k = 0.0;
    double T = 0.0;
    double beta = 0.0;
    int N = 1;
    double Z_exact = 0.0;
    double Z_em = 0.0;
    ThermoFunctions em;
    ThermoFunctions exact;
    std::size_t truncation_n = 0;
    double tail_bound = 0.0;

    double z_relative_error() const { return (Z_em - Z_exact) / Z_exact; }
};

ThermoReport thermo_report(const EnsembleParams& ep, double tol = 1e-10);

struct TemperatureRange {
    double t_min = 0.1;
    double t_max = 10.0;
    int steps = 100;

    void validate() const;
    /// Evenly spaced temperatures including both ends.
    std::vector<double> grid() const;
};

/// Rows ordered by k (outer) then T (inner).
std::vector<ThermoReport> thermo_sweep(std::span<const double> k_values, const TemperatureRange& range, int N,
                                       const PhysicalConstants& pc, double tol = 1e-10);

} // namespace majorana::thermo

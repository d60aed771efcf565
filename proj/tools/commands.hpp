#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorana/constants.hpp"
#include "majorana/entropy.hpp"
#include "majorana/spinor.hpp"

namespace majorana::cli {

enum class Format { Csv, Json };

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kBoundViolation = 3,
    kNonConvergence = 4,
    kTruncationBudget = 5,
};

/// Everything a command needs. Filled from the config file first, then from flags.
struct RunConfig {
    PhysicalConstants pc{};
    std::vector<double> omegas{0.2, 0.4, 0.8};
    std::vector<double> ks; ///< when set, overrides omegas via omega = k / (c hbar); thermo slopes
    double mass = 0.0;
    std::vector<int> levels{0, 1, 2, 3};
    double theta = kDefaultTheta;
    Space space = Space::Position;
    int grid = 401;
    std::optional<double> tmin;
    std::optional<double> tmax;
    std::optional<int> tsteps;
    Format format = Format::Csv;
    std::string out;
    double tol = 1e-10;
    int particles = 1;

    void validate() const;
    /// Frequencies used by the spinor commands.
    std::vector<double> effective_omegas() const;
    /// Slopes used by the thermodynamics command.
    std::vector<double> effective_ks() const;
    /// Applies one `key=value` setting; throws std::invalid_argument on unknown keys or bad values.
    void apply(const std::string& key, const std::string& value);
    /// Ordered key/value pairs, written into every output header.
    std::vector<std::pair<std::string, std::string>> serialize() const;
};

/// Reads `key=value` lines ('#' starts a comment) into `config`.
void merge_config_file(const std::string& path, RunConfig& config);

/// Rectangular numeric output of a command.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    int status = kOk;
    std::vector<std::string> warnings;
};

Table cmd_table1(const RunConfig& config);
Table cmd_density(const RunConfig& config);
Table cmd_entropy_density(const RunConfig& config);
Table cmd_heatmap(const RunConfig& config);
Table cmd_thermo(const RunConfig& config);

/// Half-width of the emitted coordinate grid (tail of the density below ~1e-10).
double plot_radius(double freq, int n);

/// CSV (with `#` header comments) or JSON mirroring the rows.
void write_table(std::ostream& os, const Table& table, const RunConfig& config);

std::string format_double(double v);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);

} // namespace majorana::cli

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "majorana/errors.hpp"
#include "majorana/quadrature.hpp"
#include "majorana/thermo.hpp"

namespace majorana::cli {

namespace {

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument("config: '" + key + "' expects a number, got '" + text + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + text + "'");
    return v;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) parts.push_back(item.substr(b, e - b + 1));
    }
    return parts;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& values, Fmt fmt) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += fmt(values[i]);
    }
    return out;
}

Space parse_space(const std::string& s) {
    if (s == "position") return Space::Position;
    if (s == "momentum") return Space::Momentum;
    throw std::invalid_argument("space must be 'position' or 'momentum', got '" + s + "'");
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("format must be 'csv' or 'json', got '" + s + "'");
}

const char* space_name(Space s) { return s == Space::Position ? "position" : "momentum"; }
const char* format_name(Format f) { return f == Format::Csv ? "csv" : "json"; }

// Evenly spaced points on [-radius, radius], mirrored bit-exactly about the origin.
Eigen::ArrayXd uniform_grid(int count, double radius) {
    Eigen::ArrayXd grid(count);
    for (int i = 0; i < count; ++i) {
        const int mirror = count - 1 - i;
        grid(i) = i <= mirror ? -radius + 2.0 * radius * i / (count - 1) : -grid(mirror);
    }
    if (count % 2 == 1) grid(count / 2) = 0.0;
    return grid;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void RunConfig::validate() const {
    pc.validate();
    if (omegas.empty()) throw std::invalid_argument("at least one omega is required");
    for (double w : omegas)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("omega values must be finite and > 0");
    for (double k : ks)
        if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("k values must be finite and > 0");
    if (!(mass >= 0.0)) throw std::invalid_argument("mass must be >= 0");
    if (levels.empty()) throw std::invalid_argument("at least one level n is required");
    for (int n : levels)
        if (n < 0 || n > 64) throw std::invalid_argument("levels must lie in 0..64");
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    if (grid < 2) throw std::invalid_argument("grid must have at least 2 points");
    if (tsteps && *tsteps < 1) throw std::invalid_argument("tsteps must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (particles < 1) throw std::invalid_argument("particles must be >= 1");
}

std::vector<double> RunConfig::effective_omegas() const {
    if (ks.empty()) return omegas;
    std::vector<double> out;
    for (double k : ks) out.push_back(PotentialParams{k, mass}.omega(pc));
    return out;
}

std::vector<double> RunConfig::effective_ks() const {
    return ks.empty() ? std::vector<double>{0.2, 0.4, 0.8} : ks;
}

void RunConfig::apply(const std::string& key, const std::string& value) {
    auto doubles = [&] {
        std::vector<double> out;
        for (const auto& p : split_list(value)) out.push_back(parse_double(key, p));
        return out;
    };
    if (key == "c") pc.c = parse_double(key, value);
    else if (key == "hbar") pc.hbar = parse_double(key, value);
    else if (key == "k_B" || key == "kB") pc.k_B = parse_double(key, value);
    else if (key == "omega") omegas = doubles();
    else if (key == "k") ks = doubles();
    else if (key == "mass") mass = parse_double(key, value);
    else if (key == "n") {
        levels.clear();
        for (const auto& p : split_list(value)) levels.push_back(parse_int(key, p));
    } else if (key == "theta") theta = parse_double(key, value);
    else if (key == "space") space = parse_space(value);
    else if (key == "grid") grid = parse_int(key, value);
    else if (key == "tmin") tmin = parse_double(key, value);
    else if (key == "tmax") tmax = parse_double(key, value);
    else if (key == "tsteps") tsteps = parse_int(key, value);
    else if (key == "format") format = parse_format(value);
    else if (key == "out") out = value;
    else if (key == "tol") tol = parse_double(key, value);
    else if (key == "particles") particles = parse_int(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> RunConfig::serialize() const {
    auto opt = [](const auto& o) { return o ? format_double(static_cast<double>(*o)) : std::string("auto"); };
    return {
        {"c", format_double(pc.c)},
        {"hbar", format_double(pc.hbar)},
        {"k_B", format_double(pc.k_B)},
        {"omega", join(omegas, format_double)},
        {"k", ks.empty() ? std::string("auto") : join(ks, format_double)},
        {"mass", format_double(mass)},
        {"n", join(levels, [](int n) { return std::to_string(n); })},
        {"theta", format_double(theta)},
        {"space", space_name(space)},
        {"grid", std::to_string(grid)},
        {"tmin", opt(tmin)},
        {"tmax", opt(tmax)},
        {"tsteps", tsteps ? std::to_string(*tsteps) : std::string("auto")},
        {"format", format_name(format)},
        {"tol", format_double(tol)},
        {"particles", std::to_string(particles)},
    };
}

void merge_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        config.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

double plot_radius(double freq, int n) { return 0.5 * truncation_radius(freq, n, 1e-10); }

Table cmd_table1(const RunConfig& config) {
    config.validate();
    Table t;
    t.command = "table1";
    t.columns = {"n", "omega", "S_y", "S_p", "S_sum", "bbm_bound"};
    const EntropyOptions opts{config.tol};
    for (int n : config.levels) {
        for (double omega : config.effective_omegas()) {
            const auto r = entropy_report(n, omega, config.theta, opts);
            t.rows.push_back({static_cast<double>(n), omega, r.S_y, r.S_p, r.sum, r.bbm_bound});
            if (r.violates_bound()) {
                t.status = kBoundViolation;
                t.warnings.push_back("entropic bound violated at n=" + std::to_string(n) +
                                     " omega=" + format_double(omega));
            }
        }
    }
    return t;
}

Table cmd_density(const RunConfig& config) {
    config.validate();
    Table t;
    t.command = "density";
    const bool position = config.space == Space::Position;
    t.columns = position ? std::vector<std::string>{"n", "omega", "y", "x", "rho"}
                         : std::vector<std::string>{"n", "omega", "p", "rho"};
    for (int n : config.levels) {
        for (double omega : config.effective_omegas()) {
            const double freq = position ? omega : 1.0 / omega;
            const Eigen::ArrayXd coords = uniform_grid(config.grid, plot_radius(freq, n));
            const Eigen::ArrayXd rho = density_on_grid(n, omega, config.theta, coords, config.space);
            const double shift = config.mass * config.pc.c * config.pc.c / (omega * config.pc.c * config.pc.hbar);
            for (Eigen::Index i = 0; i < coords.size(); ++i) {
                if (position)
                    t.rows.push_back({static_cast<double>(n), omega, coords(i), coords(i) - shift, rho(i)});
                else
                    t.rows.push_back({static_cast<double>(n), omega, coords(i), rho(i)});
            }
        }
    }
    return t;
}

Table cmd_entropy_density(const RunConfig& config) {
    config.validate();
    Table t;
    t.command = "entropy-density";
    const bool position = config.space == Space::Position;
    t.columns = {"n", "omega", position ? "y" : "p", "rho", "entropic_density"};
    const auto omegas = config.effective_omegas();
    for (int n : config.levels) {
        // One grid per level so curves for different omega are directly comparable.
        double radius = 0.0;
        for (double omega : omegas) radius = std::max(radius, plot_radius(position ? omega : 1.0 / omega, n));
        const Eigen::ArrayXd coords = uniform_grid(config.grid, radius);
        for (double omega : omegas) {
            const Eigen::ArrayXd rho = density_on_grid(n, omega, config.theta, coords, config.space);
            for (Eigen::Index i = 0; i < coords.size(); ++i)
                t.rows.push_back({static_cast<double>(n), omega, coords(i), rho(i), xlogx(rho(i))});
        }
    }
    return t;
}

Table cmd_heatmap(const RunConfig& config) {
    config.validate();
    Table t;
    t.command = "heatmap";
    t.columns = {"y", "t", "rho"};
    const int n = config.levels.front();
    const double omega = config.effective_omegas().front();
    const SpinorState state{n, omega, config.theta};
    // Default time window: two periods of the density, 2 pi / (c sqrt(2 omega n)) each.
    const double period = n == 0 ? 10.0 : 2.0 * std::numbers::pi / (config.pc.c * std::sqrt(2.0 * omega * n));
    const double t0 = config.tmin.value_or(0.0);
    const double t1 = config.tmax.value_or(t0 + 2.0 * period);
    const int steps = config.tsteps.value_or(100);
    if (t1 < t0) throw std::invalid_argument("heatmap: tmax must be >= tmin");
    if (steps == 1 && t1 != t0) throw std::invalid_argument("heatmap: a single time step needs tmin == tmax");
    const Eigen::ArrayXd ys = uniform_grid(config.grid, plot_radius(omega, n));
    for (int j = 0; j < steps; ++j) {
        const double time = steps == 1 ? t0 : t0 + (t1 - t0) * j / (steps - 1);
        const Eigen::ArrayXd rho = density_on_grid(n, omega, phase(state, time, config.pc), ys, Space::Position);
        for (Eigen::Index i = 0; i < ys.size(); ++i) t.rows.push_back({ys(i), time, rho(i)});
    }
    return t;
}

Table cmd_thermo(const RunConfig& config) {
    config.validate();
    Table t;
    t.command = "thermo";
    t.columns = {"k",    "T",    "beta", "coupling", "Z_exact", "Z_em",    "Z_rel_err", "F_em",
                 "U_em", "S_em", "Cv_em", "F_exact", "U_exact", "S_exact", "Cv_exact"};
    const thermo::TemperatureRange range{config.tmin.value_or(0.1), config.tmax.value_or(10.0),
                                         config.tsteps.value_or(100)};
    const auto ks = config.effective_ks();
    const auto rows = thermo::thermo_sweep(ks, range, config.particles, config.pc, config.tol);
    double worst_coupling = 0.0;
    for (const auto& r : rows) {
        const double coupling = config.pc.c * config.pc.hbar * r.k * r.beta * r.beta;
        worst_coupling = std::max(worst_coupling, coupling);
        t.rows.push_back({r.k, r.T, r.beta, coupling, r.Z_exact, r.Z_em, r.z_relative_error(), r.em.F, r.em.U,
                          r.em.S, r.em.C_V, r.exact.F, r.exact.U, r.exact.S, r.exact.C_V});
    }
    if (worst_coupling > 0.1)
        t.warnings.push_back("closed-form columns are outside their weak-coupling regime where c*hbar*k*beta^2 > 0.1 "
                             "(max " + format_double(worst_coupling) + ")");
    return t;
}

void write_table(std::ostream& os, const Table& table, const RunConfig& config) {
    const auto settings = config.serialize();
    if (config.format == Format::Csv) {
        os << "# majorana_lab " << table.command << '\n';
        os << "# config:";
        for (const auto& [key, value] : settings) os << ' ' << key << '=' << value;
        os << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
            os << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : settings) cfg[key] = value;
    doc["config"] = cfg;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["warnings"] = table.warnings;
    os << doc.dump(1) << '\n';
}

int run(int argc, const char* const* argv) {
    RunConfig config;
    try {
        if (const char* path = std::getenv("MAJORANA_LAB_CONFIG"); path && *path) merge_config_file(path, config);
    } catch (const std::exception& e) {
        std::cerr << "majorana_lab: " << e.what() << '\n';
        return kUsageError;
    }

    CLI::App app{"Quantum states, Shannon entropies and thermodynamics of linear Majorana fermions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string space = config.space == Space::Position ? "position" : "momentum";
    std::string format = config.format == Format::Csv ? "csv" : "json";
    app.add_option("--omega", config.omegas, "effective frequency omega = k/(c hbar); list allowed")->delimiter(',');
    app.add_option("--k", config.ks, "potential slope(s); overrides --omega, thermo sweep values")->delimiter(',');
    app.add_option("--mass", config.mass, "particle mass (shifts x = y - m c^2 / k)");
    app.add_option("--n", config.levels, "quantum number(s)")->delimiter(',');
    app.add_option("--theta", config.theta, "phase theta (radians); initial phase for heatmap");
    app.add_option("--space", space, "position or momentum")->check(CLI::IsMember({"position", "momentum"}));
    app.add_option("--grid", config.grid, "grid points per coordinate axis");
    app.add_option("--tmin", config.tmin, "lower end of the time (heatmap) or temperature (thermo) range");
    app.add_option("--tmax", config.tmax, "upper end of the time or temperature range");
    app.add_option("--tsteps", config.tsteps, "number of time/temperature samples");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", config.out, "output path (stdout when omitted)");
    app.add_option("--tol", config.tol, "absolute quadrature / series tolerance");
    app.add_option("--particles", config.particles, "particle count N");
    app.add_option("--c", config.pc.c, "speed of light");
    app.add_option("--hbar", config.pc.hbar, "reduced Planck constant");
    app.add_option("--kB", config.pc.k_B, "Boltzmann constant");

    auto* table1 = app.add_subcommand("table1", "Shannon entropies over n x omega with the entropic bound");
    auto* density = app.add_subcommand("density", "probability density on a uniform grid");
    auto* entropy_density = app.add_subcommand("entropy-density", "entropic density rho ln rho on a uniform grid");
    auto* heatmap = app.add_subcommand("heatmap", "position density over (y, t)");
    auto* thermo_cmd = app.add_subcommand("thermo", "thermodynamic functions over T for several k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        config.space = parse_space(space);
        config.format = parse_format(format);
        Table table;
        if (*table1) table = cmd_table1(config);
        else if (*density) table = cmd_density(config);
        else if (*entropy_density) table = cmd_entropy_density(config);
        else if (*heatmap) table = cmd_heatmap(config);
        else if (*thermo_cmd) table = cmd_thermo(config);

        if (config.out.empty()) {
            write_table(std::cout, table, config);
        } else {
            std::ofstream file(config.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output '" + config.out + "'");
            write_table(file, table, config);
        }
        for (const auto& w : table.warnings) std::cerr << "majorana_lab: warning: " << w << '\n';
        return table.status;
    } catch (const BoundViolation& e) {
        std::cerr << "majorana_lab: " << e.what() << '\n';
        return kBoundViolation;
    } catch (const NonConvergence& e) {
        std::cerr << "majorana_lab: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const TruncationBudget& e) {
        std::cerr << "majorana_lab: " << e.what() << '\n';
        return kTruncationBudget;
    } catch (const std::exception& e) {
        std::cerr << "majorana_lab: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace majorana::cli

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shockprof/dissipation.hpp"
#include "shockprof/eos.hpp"
#include "shockprof/profile.hpp"

namespace shockscan {

/// Flat "section.key" -> value settings. Config files and command-line flags
/// both write here; later writes win.
using Settings = std::map<std::string, std::string>;

/// Reads an INI file:
///
///   [shock]  q1, strength, q0
///   [eos]    name
///   [model]  name, eta, zeta, chi, mu, nu
///   [solver] rel_tol, abs_tol, tol_conn, tol_det, tol_osc, tol_spiral, offset,
///            arclength_budget, max_steps
///   [run]    out, workers, gnuplot
///
/// Unknown sections or keys are rejected.
void load_ini(const std::filesystem::path &path, Settings &settings);

/// All keys load_ini accepts.
const std::vector<std::string> &known_keys();

/// "a:b:n" (n evenly spaced points, endpoints included), comma-separated lists
/// of those, or single values. Numbers may be fractions such as 4/3.
std::vector<double> parse_grid(std::string_view text);

/// Strength grid of a scan that names neither a strength nor q0.
inline constexpr std::string_view kDefaultScanStrengths = "0.01:0.99:50";

struct RunConfig {
    std::string eos = "radiation";
    std::string model = "ft";
    std::vector<double> q1{3.0};
    std::vector<double> strength{0.5};
    std::optional<double> q0;
    std::vector<double> eta{1.0};
    std::vector<double> zeta{0.0};
    std::vector<double> chi{0.0};
    std::vector<double> mu;
    std::vector<double> nu;
    shockprof::ProfileOptions solver;
    std::filesystem::path out = ".";
    unsigned workers = 0;  ///< 0: SHOCKSCAN_WORKERS or hardware concurrency
    bool gnuplot = false;

    bool is_bdn() const { return model == "bdn"; }
    shockprof::BarotropicEos make_eos() const;
};

/// Validates settings and builds the run configuration. Grids are sorted and
/// deduplicated so scans run in lexicographic order. Throws ConfigError.
RunConfig build_config(const Settings &settings);

/// Dissipation model for one grid point.
shockprof::DissipationModel make_model(const std::string &name, double eta, double zeta, double chi, double mu,
                                       double nu);

unsigned resolve_workers(unsigned requested);

}  // namespace shockscan

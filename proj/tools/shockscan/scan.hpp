#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shockscan/config.hpp"

namespace shockscan {

/// One grid point. Coordinates are ordered as listed; scans visit points in
/// lexicographic order of this tuple.
struct ScanPoint {
    double q1 = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
    double chi = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    std::optional<double> strength;  ///< empty when q0 is given explicitly
};

struct ScanRecord {
    ScanPoint point;
    double q0 = 0.0;
    double rho_minus = 0.0;
    double rho_plus = 0.0;
    /// A profile classification, or "no_shock" / "error" when no profile was attempted.
    std::string classification;
    std::string method;
    std::string rest_minus;
    std::string rest_plus;
    std::complex<double> eig_minus[2];
    std::complex<double> eig_plus[2];
    double endpoint_error_minus = 0.0;
    double endpoint_error_plus = 0.0;
    double max_residual = 0.0;
    std::size_t samples = 0;
    std::string diagnostic;
    double wall_seconds = 0.0;  ///< not part of the CSV, which must be reproducible
};

std::vector<ScanPoint> enumerate_points(const RunConfig &config);

/// Runs a single point; every failure is recorded, never thrown.
ScanRecord run_point(const RunConfig &config, const shockprof::BarotropicEos &eos, const ScanPoint &point);

/// Evaluates all points with `workers` threads; the result is in grid order and
/// independent of the worker count.
std::vector<ScanRecord> run_scan(const RunConfig &config, unsigned workers);

void write_scan_csv(std::ostream &out, const std::vector<ScanRecord> &records);

/// Classification counts, per-group strength threshold s* (smallest strength
/// whose profile is not connected_monotone), contiguity of the non-monotone set
/// in s, and timing.
std::string scan_summary_json(const RunConfig &config, const std::vector<ScanRecord> &records, unsigned workers,
                              double wall_seconds);

}  // namespace shockscan

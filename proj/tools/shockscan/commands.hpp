#pragma once

#include <iosfwd>
#include <string>

#include "shockscan/config.hpp"

namespace shockscan {

enum ExitCode : int { exit_ok = 0, exit_config = 1, exit_no_shock = 2, exit_profile_failure = 3 };

/// End states, speeds and Lax check of a single shock, as JSON on `out`.
int cmd_rh(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Writes profile.csv and profile.json (plus profile.gp with gnuplot) to the
/// output directory; exit_ok iff the profile is connected.
int cmd_profile(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Writes scan.csv and scan_summary.json (plus scan.gp with gnuplot).
int cmd_scan(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Prints the causality class of (eta, mu, nu) and the nu bound.
int cmd_causality(const std::string &eta, const std::string &mu, const std::string &nu, std::ostream &out,
                  std::ostream &err);

}  // namespace shockscan

// shockscan: end states, profiles and parameter scans for relativistic shocks.
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "shockprof/errors.hpp"
#include "shockscan/commands.hpp"
#include "shockscan/config.hpp"

namespace {

// Command-line flag -> settings key. Every flag overrides the config file.
const std::map<std::string, std::string> kFlagKeys = {
    {"--eos", "eos.name"},
    {"--model", "model.name"},
    {"--q1", "shock.q1"},
    {"--q0", "shock.q0"},
    {"--strength", "shock.strength"},
    {"--eta", "model.eta"},
    {"--zeta", "model.zeta"},
    {"--chi", "model.chi"},
    {"--mu", "model.mu"},
    {"--nu", "model.nu"},
    {"--out", "run.out"},
    {"--workers", "run.workers"},
    {"--tol-rel", "solver.rel_tol"},
    {"--tol-abs", "solver.abs_tol"},
    {"--tol-conn", "solver.tol_conn"},
    {"--tol-det", "solver.tol_det"},
    {"--tol-osc", "solver.tol_osc"},
    {"--tol-spiral", "solver.tol_spiral"},
    {"--offset", "solver.offset"},
    {"--arclength-budget", "solver.arclength_budget"},
    {"--max-steps", "solver.max_steps"},
};

const std::map<std::string, std::string> kFlagHelp = {
    {"--eos", "radiation | power-law:K | poly:EXPR | file:PATH"},
    {"--model", "ft | ft-viscous | ft-heat | bdn | eckart"},
    {"--q1", "flux constant q1 (grid allowed in scan)"},
    {"--q0", "explicit flux constant q0 (instead of --strength)"},
    {"--strength", "shock strength s in (0,1); a:b:n or lists in scan"},
};

struct RunOptions {
    std::string config;
    std::map<std::string, std::string> values;
    bool gnuplot = false;
};

void add_run_options(CLI::App *cmd, RunOptions &opts) {
    cmd->add_option("--config", opts.config, "INI configuration file")->check(CLI::ExistingFile);
    for (const auto &[flag, key] : kFlagKeys) {
        const auto help = kFlagHelp.find(flag);
        cmd->add_option(flag, opts.values[flag], help == kFlagHelp.end() ? key : help->second);
    }
    cmd->add_flag("--gnuplot", opts.gnuplot, "also write a gnuplot script");
}

shockscan::RunConfig resolve(CLI::App *cmd, const RunOptions &opts, bool scan = false) {
    shockscan::Settings settings;
    if (!opts.config.empty()) shockscan::load_ini(opts.config, settings);
    for (const auto &[flag, key] : kFlagKeys) {
        if (cmd->count(flag) > 0) settings[key] = opts.values.at(flag);
    }
    if (opts.gnuplot) settings["run.gnuplot"] = "true";
    if (scan && !settings.count("shock.strength") && !settings.count("shock.q0")) {
        settings["shock.strength"] = shockscan::kDefaultScanStrengths;
    }
    return shockscan::build_config(settings);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rankine-Hugoniot end states and dissipation profiles of relativistic barotropic shocks"};
    app.require_subcommand(1);
    app.footer(
        "Frame: standing shock at x = 0, fluid moving in +x (q0, q1 > 0); other shocks are Lorentz images.\n"
        "Strength s in (0,1): q0^2 = q1^2 + (1 - s) Q(q1), s -> 0 weak, s -> 1 strong.\n"
        "Exit codes: 0 ok, 1 config error, 2 no shock, 3 profile failure.");

    RunOptions rh_opts, profile_opts, scan_opts;
    auto *rh = app.add_subcommand("rh", "end states, characteristic speeds and Lax check");
    add_run_options(rh, rh_opts);
    auto *profile = app.add_subcommand("profile", "compute and classify one dissipation profile");
    add_run_options(profile, profile_opts);
    auto *scan = app.add_subcommand("scan", "classify profiles over parameter grids");
    add_run_options(scan, scan_opts);

    std::string eta, mu, nu;
    auto *causality = app.add_subcommand("causality", "causality class of BDN coefficients");
    causality->add_option("eta", eta, "viscosity")->required();
    causality->add_option("mu", mu, "first regulator")->required();
    causality->add_option("nu", nu, "second regulator")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : shockscan::exit_config;
    }

    if (causality->parsed()) return shockscan::cmd_causality(eta, mu, nu, std::cout, std::cerr);

    try {
        if (rh->parsed()) return shockscan::cmd_rh(resolve(rh, rh_opts), std::cout, std::cerr);
        if (profile->parsed()) return shockscan::cmd_profile(resolve(profile, profile_opts), std::cout, std::cerr);
        return shockscan::cmd_scan(resolve(scan, scan_opts, true), std::cout, std::cerr);
    } catch (const shockprof::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return shockscan::exit_config;
    } catch (const shockprof::EosError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return shockscan::exit_config;
    }
}

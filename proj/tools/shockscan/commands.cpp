#include "shockscan/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "shockprof/serialize.hpp"
#include "shockscan/scan.hpp"

namespace shockscan {

using nlohmann::ordered_json;
using shockprof::ConfigError;

namespace {

void require_single(const RunConfig &c, const char *command) {
    const bool single = c.q1.size() == 1 && c.strength.size() <= 1 && c.eta.size() == 1 && c.zeta.size() == 1 &&
                        c.chi.size() == 1 && c.mu.size() == 1 && c.nu.size() == 1;
    if (!single) throw ConfigError(std::string(command) + " takes a single grid point; use scan for grids");
}

shockprof::FluxConstants flux_constants(const RunConfig &c, const shockprof::BarotropicEos &eos) {
    if (c.q0) return {*c.q0, c.q1.front()};
    return shockprof::shock_from_strength(c.q1.front(), c.strength.front(), eos);
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write '" + path.string() + "'");
    return f;
}

void prepare_dir(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace

int cmd_rh(const RunConfig &c, std::ostream &out, std::ostream &err) {
    try {
        require_single(c, "rh");
        const auto eos = c.make_eos();
        const auto shock = shockprof::end_states(flux_constants(c, eos), eos);
        out << shockprof::shock_to_json(shock) << '\n';
        if (!shock.lax_ok) err << "warning: end states do not satisfy the Lax conditions\n";
        return exit_ok;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const shockprof::NoShockError &e) {
        err << "no shock: " << e.what() << '\n';
        return exit_no_shock;
    }
}

int cmd_profile(const RunConfig &c, std::ostream &out, std::ostream &err) {
    try {
        require_single(c, "profile");
        const auto eos = c.make_eos();
        const auto model = make_model(c.model, c.eta.front(), c.zeta.front(), c.chi.front(), c.mu.front(),
                                      c.nu.front());
        const auto shock = shockprof::end_states(flux_constants(c, eos), eos);
        const auto result = shockprof::compute_profile(model, shock, eos, c.solver);

        prepare_dir(c.out);
        {
            auto f = open_output(c.out / "profile.csv");
            shockprof::write_profile_csv(f, result);
        }
        {
            ordered_json j;
            j["model"] = c.model;
            j["eos"] = c.eos;
            j["coefficients"] = {{"eta", c.eta.front()}, {"zeta", c.zeta.front()}, {"chi", c.chi.front()},
                                 {"mu", c.mu.front()},   {"nu", c.nu.front()}};
            if (!c.strength.empty()) j["strength"] = c.strength.front();
            j["shock"] = ordered_json::parse(shockprof::shock_to_json(shock));
            j["profile"] = ordered_json::parse(shockprof::profile_summary_json(result));
            auto f = open_output(c.out / "profile.json");
            f << j.dump(2) << '\n';
        }
        if (c.gnuplot) {
            auto f = open_output(c.out / "profile.gp");
            f << "set datafile separator ','\n"
                 "set key autotitle columnhead\n"
                 "set xlabel 'x'\n"
                 "set ylabel 'rho'\n"
                 "plot 'profile.csv' using 1:4 with lines\n";
        }
        const std::string cls(to_string(result.classification));
        out << "classification: " << cls << '\n';
        if (is_connected(result.classification)) return exit_ok;
        err << "profile failure: " << cls;
        if (!result.diagnostic.empty()) err << ": " << result.diagnostic;
        err << '\n';
        return exit_profile_failure;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const shockprof::NoShockError &e) {
        err << "no shock: " << e.what() << '\n';
        return exit_no_shock;
    } catch (const shockprof::Error &e) {
        err << "profile failure: error: " << e.what() << '\n';
        return exit_profile_failure;
    }
}

int cmd_scan(const RunConfig &c, std::ostream &out, std::ostream &err) {
    try {
        const unsigned workers = resolve_workers(c.workers);
        const auto t0 = std::chrono::steady_clock::now();
        const auto records = run_scan(c, workers);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        prepare_dir(c.out);
        {
            auto f = open_output(c.out / "scan.csv");
            write_scan_csv(f, records);
        }
        const std::string summary = scan_summary_json(c, records, workers, wall);
        {
            auto f = open_output(c.out / "scan_summary.json");
            f << summary << '\n';
        }
        if (c.gnuplot) {
            auto f = open_output(c.out / "scan.gp");
            f << "set datafile separator ','\n"
                 "set key autotitle columnhead\n"
                 "set xlabel 'strength'\n"
                 "set ylabel '|Im lambda| at psi+'\n"
                 "plot 'scan.csv' using 8:(abs($21)) with points\n";
        }
        const auto counts = ordered_json::parse(summary)["counts"];
        out << records.size() << " points:";
        for (const auto &[name, n] : counts.items()) {
            if (n.get<int>() > 0) out << ' ' << name << '=' << n.get<int>();
        }
        out << '\n';
        return exit_ok;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

int cmd_causality(const std::string &eta, const std::string &mu, const std::string &nu, std::ostream &out,
                  std::ostream &err) {
    try {
        const shockprof::BdnCoefficients k{shockprof::parse_rational(eta), shockprof::parse_rational(mu),
                                           shockprof::parse_rational(nu)};
        k.validate();
        const auto cls = shockprof::bdn_causality_class(k);
        const double bound = shockprof::bdn_nu_bound(k.eta, k.mu);
        out << to_string(cls);
        if (cls == shockprof::BdnCausality::sharply_causal) out << " (bound " << short_number(bound) << ')';
        out << "\nnu_bound " << short_number(bound) << '\n';
        return exit_ok;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

}  // namespace shockscan

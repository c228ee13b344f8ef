#include "shockscan/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "shockprof/errors.hpp"

namespace shockscan {

using shockprof::ConfigError;

const std::vector<std::string> &known_keys() {
    static const std::vector<std::string> keys = {
        "shock.q1",        "shock.strength",  "shock.q0",          "eos.name",          "model.name",
        "model.eta",       "model.zeta",      "model.chi",         "model.mu",          "model.nu",
        "solver.rel_tol",  "solver.abs_tol",  "solver.tol_conn",   "solver.tol_det",    "solver.tol_osc",
        "solver.tol_spiral", "solver.offset", "solver.arclength_budget", "solver.max_steps", "run.out",
        "run.workers",     "run.gnuplot"};
    return keys;
}

void load_ini(const std::filesystem::path &path, Settings &settings) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw ConfigError("config file: " + std::string(e.what()));
    }
    const auto &keys = known_keys();
    for (const auto &[section, body] : tree) {
        if (body.empty()) throw ConfigError("config file: key '" + section + "' outside any section");
        for (const auto &[key, value] : body) {
            const std::string full = section + "." + key;
            if (std::find(keys.begin(), keys.end(), full) == keys.end()) {
                throw ConfigError("config file: unknown key '" + full + "'");
            }
            settings[full] = value.get_value<std::string>();
        }
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

double number(const Settings &s, const std::string &key, double fallback) {
    const auto it = s.find(key);
    return it == s.end() ? fallback : shockprof::parse_rational(it->second);
}

std::vector<double> grid(const Settings &s, const std::string &key, std::vector<double> fallback) {
    const auto it = s.find(key);
    if (it == s.end()) return fallback;
    return sorted_unique(parse_grid(it->second));
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) continue;
        const std::size_t c1 = item.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(shockprof::parse_rational(item));
            continue;
        }
        const std::size_t c2 = item.find(':', c1 + 1);
        if (c2 == std::string_view::npos) throw ConfigError("grid range must be a:b:n, got '" + std::string(item) + "'");
        const double a = shockprof::parse_rational(item.substr(0, c1));
        const double b = shockprof::parse_rational(item.substr(c1 + 1, c2 - c1 - 1));
        const double n_real = shockprof::parse_rational(item.substr(c2 + 1));
        if (!(n_real >= 1.0) || n_real != static_cast<double>(static_cast<long>(n_real))) {
            throw ConfigError("grid point count must be a positive integer in '" + std::string(item) + "'");
        }
        const long n = static_cast<long>(n_real);
        if (n == 1) {
            out.push_back(a);
            continue;
        }
        for (long i = 0; i < n; ++i) {
            out.push_back(i == n - 1 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
    }
    if (out.empty()) throw ConfigError("empty grid '" + std::string(text) + "'");
    return out;
}

shockprof::BarotropicEos RunConfig::make_eos() const {
    try {
        return shockprof::BarotropicEos::from_spec(eos);
    } catch (const shockprof::EosError &e) {
        throw ConfigError(e.what());
    }
}

RunConfig build_config(const Settings &s) {
    RunConfig c;
    if (auto it = s.find("eos.name"); it != s.end()) c.eos = it->second;
    if (auto it = s.find("model.name"); it != s.end()) c.model = it->second;
    static const std::vector<std::string> models = {"ft", "ft-viscous", "ft-heat", "bdn", "eckart"};
    if (std::find(models.begin(), models.end(), c.model) == models.end()) {
        throw ConfigError("unknown model '" + c.model + "' (expected ft, ft-viscous, ft-heat, bdn, eckart)");
    }

    c.q1 = grid(s, "shock.q1", c.q1);
    for (double q1 : c.q1) {
        if (!(q1 > 0.0)) throw ConfigError("q1 must be positive");
    }
    const bool has_strength = s.count("shock.strength") != 0;
    if (s.count("shock.q0")) {
        if (has_strength) throw ConfigError("give either a shock strength or q0, not both");
        c.q0 = number(s, "shock.q0", 0.0);
        c.strength.clear();
    } else {
        // Strengths outside (0, 1) are reported as no-shock points, not config errors.
        c.strength = grid(s, "shock.strength", c.strength);
    }

    c.eta = grid(s, "model.eta", c.eta);
    c.zeta = grid(s, "model.zeta", c.zeta);
    c.chi = grid(s, "model.chi", c.chi);
    c.mu = grid(s, "model.mu", c.mu);
    c.nu = grid(s, "model.nu", c.nu);
    if (c.is_bdn()) {
        if (c.mu.empty() || c.nu.empty()) throw ConfigError("the bdn model needs mu and nu");
        if (s.count("model.zeta") || s.count("model.chi")) throw ConfigError("the bdn model takes eta, mu, nu only");
    } else {
        if (!c.mu.empty() || !c.nu.empty()) throw ConfigError("mu and nu apply to the bdn model only");
        c.mu = {0.0};
        c.nu = {0.0};
    }
    if (c.model == "ft-viscous" && (c.chi.size() != 1 || c.chi.front() != 0.0)) {
        throw ConfigError("ft-viscous requires chi = 0");
    }
    if (c.model == "ft-heat" && c.chi.front() <= 0.0) throw ConfigError("ft-heat requires chi > 0");

    auto &o = c.solver;
    o.rel_tol = number(s, "solver.rel_tol", o.rel_tol);
    o.abs_tol = number(s, "solver.abs_tol", o.abs_tol);
    o.tol_conn = number(s, "solver.tol_conn", o.tol_conn);
    o.tol_det = number(s, "solver.tol_det", o.tol_det);
    o.tol_osc = number(s, "solver.tol_osc", o.tol_osc);
    o.tol_spiral = number(s, "solver.tol_spiral", o.tol_spiral);
    o.offset = number(s, "solver.offset", o.offset);
    o.arclength_budget = number(s, "solver.arclength_budget", o.arclength_budget);
    o.max_steps = static_cast<long>(number(s, "solver.max_steps", static_cast<double>(o.max_steps)));
    for (double t : {o.rel_tol, o.abs_tol, o.tol_conn, o.tol_det, o.tol_osc, o.tol_spiral, o.offset,
                     o.arclength_budget}) {
        if (!(t > 0.0)) throw ConfigError("solver tolerances must be positive");
    }
    if (o.max_steps <= 0) throw ConfigError("solver.max_steps must be positive");

    if (auto it = s.find("run.out"); it != s.end()) c.out = it->second;
    if (auto it = s.find("run.workers"); it != s.end()) {
        const double w = shockprof::parse_rational(it->second);
        if (!(w >= 0.0) || w != static_cast<double>(static_cast<unsigned>(w))) {
            throw ConfigError("workers must be a non-negative integer");
        }
        c.workers = static_cast<unsigned>(w);
    }
    if (auto it = s.find("run.gnuplot"); it != s.end()) {
        const std::string &v = it->second;
        if (v == "true" || v == "1" || v == "yes") {
            c.gnuplot = true;
        } else if (v == "false" || v == "0" || v == "no") {
            c.gnuplot = false;
        } else {
            throw ConfigError("run.gnuplot must be true or false");
        }
    }

    // Model/EOS compatibility is checked up front so that scans fail fast.
    const auto eos = c.make_eos();
    for (double eta : c.eta) {
        for (double zeta : c.zeta) {
            for (double chi : c.chi) {
                for (double mu : c.mu) {
                    for (double nu : c.nu) make_model(c.model, eta, zeta, chi, mu, nu).validate_for(eos);
                }
            }
        }
    }
    return c;
}

shockprof::DissipationModel make_model(const std::string &name, double eta, double zeta, double chi, double mu,
                                       double nu) {
    using shockprof::DissipationModel;
    if (name == "bdn") return DissipationModel::bdn({eta, mu, nu});
    if (name == "eckart") return DissipationModel::eckart({eta, zeta, chi});
    return DissipationModel::ft({eta, zeta, chi});
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("SHOCKSCAN_WORKERS")) {
        char *end = nullptr;
        const long w = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && w > 0) return static_cast<unsigned>(w);
        throw ConfigError("SHOCKSCAN_WORKERS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace shockscan

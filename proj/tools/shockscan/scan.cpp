#include "shockscan/scan.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "shockprof/serialize.hpp"

namespace shockscan {

using nlohmann::ordered_json;
using shockprof::format_double;

std::vector<ScanPoint> enumerate_points(const RunConfig &c) {
    std::vector<ScanPoint> points;
    std::vector<std::optional<double>> strengths;
    if (c.q0) {
        strengths.emplace_back();
    } else {
        for (double s : c.strength) strengths.emplace_back(s);
    }
    for (double q1 : c.q1) {
        for (double eta : c.eta) {
            for (double zeta : c.zeta) {
                for (double chi : c.chi) {
                    for (double mu : c.mu) {
                        for (double nu : c.nu) {
                            for (const auto &s : strengths) points.push_back({q1, eta, zeta, chi, mu, nu, s});
                        }
                    }
                }
            }
        }
    }
    return points;
}

ScanRecord run_point(const RunConfig &c, const shockprof::BarotropicEos &eos, const ScanPoint &p) {
    const auto t0 = std::chrono::steady_clock::now();
    ScanRecord r;
    r.point = p;
    try {
        const auto model = make_model(c.model, p.eta, p.zeta, p.chi, p.mu, p.nu);
        const shockprof::FluxConstants q =
            p.strength ? shockprof::shock_from_strength(p.q1, *p.strength, eos) : shockprof::FluxConstants{*c.q0, p.q1};
        r.q0 = q.q0;
        const auto shock = shockprof::end_states(q, eos);
        r.rho_minus = shock.rho_minus;
        r.rho_plus = shock.rho_plus;
        const auto result = shockprof::compute_profile(model, shock, eos, c.solver);
        r.classification = std::string(to_string(result.classification));
        r.method = result.method;
        r.rest_minus = std::string(to_string(result.rest_minus.type));
        r.rest_plus = std::string(to_string(result.rest_plus.type));
        for (int i = 0; i < 2; ++i) {
            r.eig_minus[i] = result.rest_minus.eigenvalues[i];
            r.eig_plus[i] = result.rest_plus.eigenvalues[i];
        }
        r.endpoint_error_minus = result.endpoint_error_minus;
        r.endpoint_error_plus = result.endpoint_error_plus;
        r.max_residual = result.max_residual;
        r.samples = result.samples.size();
        r.diagnostic = result.diagnostic;
    } catch (const shockprof::NoShockError &e) {
        r.classification = "no_shock";
        r.diagnostic = e.what();
    } catch (const std::exception &e) {
        r.classification = "error";
        r.diagnostic = e.what();
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<ScanRecord> run_scan(const RunConfig &c, unsigned workers) {
    const auto eos = c.make_eos();
    const auto points = enumerate_points(c);
    std::vector<ScanRecord> records(points.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) records[i] = run_point(c, eos, points[i]);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    return records;
}

namespace {

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch == '\n' ? ' ' : ch;
    }
    return out + '"';
}

}  // namespace

void write_scan_csv(std::ostream &out, const std::vector<ScanRecord> &records) {
    out << "index,q1,eta,zeta,chi,mu,nu,strength,q0,rho_minus,rho_plus,classification,method,rest_minus,rest_plus,"
           "eig_minus_1_re,eig_minus_1_im,eig_minus_2_re,eig_minus_2_im,eig_plus_1_re,eig_plus_1_im,eig_plus_2_re,"
           "eig_plus_2_im,endpoint_error_minus,endpoint_error_plus,max_residual,samples,diagnostic\n";
    std::size_t index = 0;
    for (const auto &r : records) {
        const auto &p = r.point;
        out << index++ << ',' << format_double(p.q1) << ',' << format_double(p.eta) << ',' << format_double(p.zeta)
            << ',' << format_double(p.chi) << ',' << format_double(p.mu) << ',' << format_double(p.nu) << ','
            << (p.strength ? format_double(*p.strength) : "") << ',' << format_double(r.q0) << ','
            << format_double(r.rho_minus) << ',' << format_double(r.rho_plus) << ',' << r.classification << ','
            << r.method << ',' << r.rest_minus << ',' << r.rest_plus;
        for (const auto *eig : {r.eig_minus, r.eig_plus}) {
            for (int i = 0; i < 2; ++i) out << ',' << format_double(eig[i].real()) << ',' << format_double(eig[i].imag());
        }
        out << ',' << format_double(r.endpoint_error_minus) << ',' << format_double(r.endpoint_error_plus) << ','
            << format_double(r.max_residual) << ',' << r.samples << ',' << csv_quote(r.diagnostic) << '\n';
    }
}

std::string scan_summary_json(const RunConfig &c, const std::vector<ScanRecord> &records, unsigned workers,
                              double wall_seconds) {
    ordered_json j;
    j["points"] = records.size();
    j["model"] = c.model;
    j["eos"] = c.eos;

    ordered_json counts = ordered_json::object();
    for (const char *name : {"connected_monotone", "connected_oscillatory", "escaped_domain", "singular_matrix",
                             "no_connection", "no_shock", "error"}) {
        counts[name] = 0;
    }
    for (const auto &r : records) counts[r.classification] = counts[r.classification].get<int>() + 1;
    j["counts"] = counts;

    if (!c.q0) {
        // Records are grouped by the non-strength coordinates; strength varies fastest.
        using Key = std::tuple<double, double, double, double, double, double>;
        std::map<Key, std::vector<const ScanRecord *>> groups;
        for (const auto &r : records) {
            const auto &p = r.point;
            groups[{p.q1, p.eta, p.zeta, p.chi, p.mu, p.nu}].push_back(&r);
        }
        ordered_json arr = ordered_json::array();
        for (const auto &[key, rows] : groups) {
            ordered_json g;
            g["q1"] = std::get<0>(key);
            g["eta"] = std::get<1>(key);
            g["zeta"] = std::get<2>(key);
            g["chi"] = std::get<3>(key);
            g["mu"] = std::get<4>(key);
            g["nu"] = std::get<5>(key);
            std::optional<double> threshold;
            bool contiguous = true;
            ordered_json oscillatory = ordered_json::array();
            ordered_json failures = ordered_json::array();
            for (const ScanRecord *r : rows) {
                const double s = *r->point.strength;
                const bool monotone = r->classification == "connected_monotone";
                if (!monotone && !threshold) threshold = s;
                if (monotone && threshold) contiguous = false;
                if (r->classification == "connected_oscillatory") {
                    oscillatory.push_back(s);
                } else if (!monotone) {
                    failures.push_back(s);
                }
            }
            g["threshold_strength"] = threshold ? ordered_json(*threshold) : ordered_json(nullptr);
            g["contiguous_upper_range"] = threshold.has_value() && contiguous;
            g["oscillatory_strengths"] = oscillatory;
            g["failure_strengths"] = failures;
            arr.push_back(g);
        }
        j["groups"] = arr;
    }
    j["note"] =
        "Classifications are numerical evidence from finite-tolerance integration on a finite grid, not a proof.";
    j["workers"] = workers;
    j["wall_time_seconds"] = wall_seconds;
    return j.dump(2);
}

}  // namespace shockscan

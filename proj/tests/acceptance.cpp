// Acceptance suite: one PASS/FAIL line per criterion, followed by the
// quantities the decision was based on.
//
// Criteria listed in kKnownRed are expected to fail with the current model
// (see README, "Known failing criterion"); they are still evaluated and
// reported as FAIL, but do not change the exit status. If one of them starts
// passing the suite says so and fails, so the list cannot go stale silently.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shockprof/dissipation.hpp"
#include "shockprof/errors.hpp"
#include "shockprof/profile.hpp"
#include "shockprof/rankine_hugoniot.hpp"
#include "shockscan/config.hpp"
#include "shockscan/scan.hpp"

using namespace shockprof;

namespace {

const std::set<std::string> kKnownRed = {"strictly_causal_bdn_nonexistence"};

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Appends a printf-style note to the outcome detail.
template <typename... Args>
void note(Outcome &o, const char *fmt, Args... args) {
    char buf[512];
    if constexpr (sizeof...(Args) == 0) {
        std::snprintf(buf, sizeof buf, "%s", fmt);
    } else {
        std::snprintf(buf, sizeof buf, fmt, args...);
    }
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += buf;
}

const BarotropicEos &rad() {
    static const auto eos = BarotropicEos::radiation();
    return eos;
}

std::vector<double> strength_grid() {
    std::vector<double> s;
    for (int i = 1; i <= 19; ++i) s.push_back(0.05 * i);
    return s;
}

constexpr double kQ1[] = {0.5, 3.0, 10.0};

bool strictly_increasing_rho(const ProfileResult &r) {
    for (std::size_t i = 1; i < r.samples.size(); ++i)
        if (!(r.samples[i].rho > r.samples[i - 1].rho)) return false;
    return true;
}

/// Lax pattern: both speeds positive upstream, opposite signs downstream.
bool lax_pattern(const ShockData &sh) {
    return sh.speeds_minus.lambda1 > 0.0 && sh.speeds_minus.lambda2 > 0.0 && sh.speeds_plus.lambda1 < 0.0 &&
           sh.speeds_plus.lambda2 > 0.0;
}

/// L increases between consecutive samples. Where the increment is below the
/// resolution of L itself (next to the rest points) the analytic derivative
/// dL/dx = F . M^{-1} F must be positive at both samples instead.
bool lyapunov_increasing(const ProfileResult &r, const DissipationModel &model, const ShockData &sh) {
    auto rate = [&](const ProfileSample &s) {
        const FluidState st = FluidState::from_contravariant(s.psi);
        return dot(flux_residual(st, sh.q, rad()), planar_rhs(model, st, sh.q, rad()));
    };
    for (std::size_t i = 1; i < r.samples.size(); ++i) {
        const double a = r.samples[i - 1].lyapunov, b = r.samples[i].lyapunov;
        if (b > a) continue;
        if (a - b > 8.0 * std::numeric_limits<double>::epsilon() * std::abs(a)) return false;
        if (!(rate(r.samples[i - 1]) > 0.0 && rate(r.samples[i]) > 0.0)) return false;
    }
    return true;
}

int g_lax_checked = 0;
int g_lax_failed = 0;

ShockData checked_shock(double q1, double s, const BarotropicEos &eos) {
    ShockData sh = end_states(shock_from_strength(q1, s, eos), eos);
    ++g_lax_checked;
    if (!lax_pattern(sh)) ++g_lax_failed;
    return sh;
}

Outcome viscous_profiles() {
    Outcome o;
    int runs = 0, bad = 0;
    double worst_err = 0.0;
    const BarotropicEos k5 = BarotropicEos::power_law(5.0);
    for (const BarotropicEos *eos : {&rad(), &k5})
        for (double q1 : kQ1)
            for (double s : strength_grid()) {
                const ShockData sh = checked_shock(q1, s, *eos);
                const auto r = scalar_profile_ft(sh, *eos, {1.0, 0.0, 0.0});
                ++runs;
                const double err = std::max(r.endpoint_error_minus, r.endpoint_error_plus);
                worst_err = std::max(worst_err, err);
                if (r.classification != Classification::connected_monotone || !(err < 1e-6) ||
                    !strictly_increasing_rho(r)) {
                    ++bad;
                    note(o, "%s q1=%g s=%g -> %s err=%.2e", eos->name().c_str(), q1, s,
                         std::string(to_string(r.classification)).c_str(), err);
                }
            }
    o.pass = bad == 0;
    note(o, "%d profiles (radiation and power-law:5), %d bad, worst endpoint error %.2e", runs, bad, worst_err);
    return o;
}

Outcome heat_conducting_profiles() {
    Outcome o;
    int runs = 0, bad = 0;
    double worst_err = 0.0;
    for (double chi : {0.1, 0.5, 1.0})
        for (double q1 : kQ1)
            for (double s : strength_grid()) {
                const ShockData sh = checked_shock(q1, s, rad());
                const auto r = compute_profile(DissipationModel::ft({1.0, 0.0, chi}), sh, rad());
                ++runs;
                bool ok = r.classification == Classification::connected_monotone;
                const double err = std::max(r.endpoint_error_minus, r.endpoint_error_plus);
                worst_err = std::max(worst_err, err);
                const auto model = DissipationModel::ft({1.0, 0.0, chi});
                ok = ok && lyapunov_increasing(r, model, sh);
                const Mat2 h_minus = spatial_hessian(sh.state_minus, rad());
                const Mat2 h_plus = spatial_hessian(sh.state_plus, rad());
                ok = ok && is_positive_definite(h_minus) && h_plus.det() < 0.0;
                if (!ok) {
                    ++bad;
                    note(o, "chi=%g q1=%g s=%g -> %s", chi, q1, s, std::string(to_string(r.classification)).c_str());
                }
            }
    o.pass = bad == 0;
    note(o, "%d profiles, %d bad, worst endpoint error %.2e", runs, bad, worst_err);
    return o;
}

Outcome small_chi_consistency() {
    Outcome o;
    const ShockData sh = checked_shock(3.0, 0.5, rad());
    const auto viscous = scalar_profile_ft(sh, rad(), {1.0, 0.0, 0.0});
    const auto heat = compute_profile(DissipationModel::ft({1.0, 0.0, 1e-3}), sh, rad());
    double d = 0.0;
    for (const auto *r : {&viscous, &heat})
        for (const auto &s : r->samples)
            d = std::max(d, std::abs(interpolate_rho(viscous, s.x) - interpolate_rho(heat, s.x)));
    o.pass = heat.classification == Classification::connected_monotone && d < 1e-2;
    note(o, "sup |rho_chi - rho_0| = %.3e (limit 1e-2), planar %s", d,
         std::string(to_string(heat.classification)).c_str());
    return o;
}

Outcome end_state_root_oracle() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> uq(0.2, 12.0), us(0.02, 0.98);
    const BarotropicEos laws[] = {rad(), BarotropicEos::power_law(5.0), BarotropicEos::power_law(3.0),
                                  BarotropicEos::power_sum({{1.0 / 3.0, 4.0}, {0.5, 3.0}})};
    int bad = 0, concave_checked = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto &eos = laws[trial % 4];
        const double q1 = uq(rng), s = us(rng);
        const FluxConstants q = shock_from_strength(q1, s, eos);
        const double level = q.q0 * q.q0 - q1 * q1;
        const double hi = rho_bar(q1, eos);
        auto f = [&](double r) { return g_eval(r, q1, eos) - level; };
        std::vector<double> roots;
        const int n = 10'000;
        double prev_r = 0.0, prev = f(0.0);
        for (int i = 1; i <= n; ++i) {
            const double r = hi * i / n;
            const double v = f(r);
            if ((prev < 0.0) != (v < 0.0)) {
                double a = prev_r, b = r, fa = prev;
                for (int k = 0; k < 200 && b - a > 1e-15 * hi; ++k) {
                    const double m = 0.5 * (a + b);
                    const double fm = f(m);
                    if ((fm < 0.0) == (fa < 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                roots.push_back(0.5 * (a + b));
            }
            prev = v;
            prev_r = r;
        }
        ShockData sh;
        try {
            sh = end_states(q, eos);
        } catch (const Error &e) {
            ++bad;
            note(o, "end_states failed: %s", e.what());
            continue;
        }
        ++g_lax_checked;
        if (!lax_pattern(sh)) ++g_lax_failed;
        if (roots.size() != 2) {
            ++bad;
            note(o, "q1=%g s=%g: %zu sign changes", q1, s, roots.size());
            continue;
        }
        const double e = std::max(std::abs(sh.rho_minus - roots[0]) / std::max(1.0, roots[0]),
                                  std::abs(sh.rho_plus - roots[1]) / std::max(1.0, roots[1]));
        worst = std::max(worst, e);
        if (!(e < 1e-8)) ++bad;

        const auto m = q_max(q1, eos);
        if (eos.gnl_indicator(m.rho_star) > 0.0) {
            ++concave_checked;
            const double h = 1e-4 * m.rho_star;
            const double g2 = (g_eval(m.rho_star + h, q1, eos) - 2.0 * g_eval(m.rho_star, q1, eos) +
                               g_eval(m.rho_star - h, q1, eos)) / (h * h);
            if (!(g2 < 0.0)) {
                ++bad;
                note(o, "g'' = %g >= 0 at the maximizer (q1=%g)", g2, q1);
            }
        }
    }
    o.pass = bad == 0;
    note(o, "200 cases, %d bad, worst root deviation %.2e, concavity checked %d times", bad, worst, concave_checked);
    return o;
}

Outcome characteristic_speed_oracle() {
    Outcome o;
    const BarotropicEos laws[] = {rad(), BarotropicEos::power_law(5.0),
                                  BarotropicEos::power_sum({{1.0, 3.0}, {1.0, 5.0}})};
    oracle::StateSampler sample(777, 0.3, 3.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto &eos = laws[i % 3];
        const auto p = sample();
        const FluidState st(p[0], p[1]);
        const auto want = oracle::velocity_addition(st.three_velocity(), std::sqrt(eos.thermo(st.theta()).cs2));
        const auto got = char_speeds(st, eos);
        worst = std::max({worst, std::abs(got.lambda1 - want[0]), std::abs(got.lambda2 - want[1])});
    }
    // Every shock constructed by the other criteria is counted here; this one
    // runs after them.
    o.pass = worst < 1e-8 && g_lax_failed == 0 && g_lax_checked > 0;
    note(o, "100 states, max |lambda - velocity addition| = %.2e; Lax pattern failed at %d of %d shocks", worst,
         g_lax_failed, g_lax_checked);
    return o;
}

shockscan::RunConfig bdn_scan_config(const char *nu) {
    return shockscan::build_config({{"model.name", "bdn"},
                                    {"model.eta", "1"},
                                    {"model.mu", "4/3"},
                                    {"model.nu", nu},
                                    {"shock.q1", "3"},
                                    {"shock.strength", std::string(shockscan::kDefaultScanStrengths)}});
}

std::string classification_histogram(const std::vector<shockscan::ScanRecord> &records) {
    std::map<std::string, int> counts;
    for (const auto &r : records) ++counts[r.classification];
    std::ostringstream os;
    for (const auto &[k, v] : counts) os << (os.tellp() > 0 ? " " : "") << k << '=' << v;
    return os.str();
}

Outcome sharply_causal_bdn() {
    Outcome o;
    const double bound = bdn_nu_bound(1.0, 4.0 / 3.0);
    const auto records = shockscan::run_scan(bdn_scan_config("4"), 0);
    std::optional<double> threshold;
    bool contiguous = true;
    for (const auto &r : records) {
        const bool flagged = r.classification != "connected_monotone";
        if (flagged && !threshold) threshold = *r.point.strength;
        if (!flagged && threshold) contiguous = false;
    }
    o.pass = bound == 4.0 && bdn_causality_class({1.0, 4.0 / 3.0, 4.0}) == BdnCausality::sharply_causal &&
             records.size() == 50 && threshold.has_value() && contiguous;
    note(o, "nu bound = %.17g", bound);
    note(o, "%zu points: %s", records.size(), classification_histogram(records).c_str());
    note(o, threshold ? "threshold s* = %.6g, contiguous upper range: %s" : "no threshold%s%s",
         threshold.value_or(0.0), contiguous ? "yes" : "no");
    note(o, "numerical evidence only, not a proof");
    return o;
}

Outcome strictly_causal_bdn() {
    Outcome o;
    const auto records = shockscan::run_scan(bdn_scan_config("2"), 0);
    int failures = 0;
    for (const auto &r : records)
        if (r.classification == "escaped_domain" || r.classification == "singular_matrix" ||
            r.classification == "no_connection")
            ++failures;
    o.pass = bdn_causality_class({1.0, 4.0 / 3.0, 2.0}) == BdnCausality::strictly_causal && failures > 0;
    note(o, "%zu points: %s", records.size(), classification_histogram(records).c_str());
    note(o, "failure set size %d (needs > 0)", failures);
    return o;
}

Outcome causality_classifier() {
    Outcome o;
    const auto a = bdn_causality_class({1.0, 4.0 / 3.0, 4.0});
    const auto b = bdn_causality_class({1.0, 4.0 / 3.0, 2.0});
    const auto c = bdn_causality_class({1.0, 1.0, 1.0});
    o.pass = a == BdnCausality::sharply_causal && b == BdnCausality::strictly_causal && c == BdnCausality::acausal;
    note(o, "(1,4/3,4) %s, (1,4/3,2) %s, (1,1,1) %s", std::string(to_string(a)).c_str(),
         std::string(to_string(b)).c_str(), std::string(to_string(c)).c_str());
    return o;
}

Outcome gradient_assembly() {
    Outcome o;
    const ShockData sh = end_states(shock_from_strength(3.0, 0.5, rad()), rad());

    // Lyapunov gradient vs central differences.
    double worst_l = 0.0;
    oracle::StateSampler sample(99);
    for (int i = 0; i < 100; ++i) {
        const auto p = sample();
        const FluidState s(p[0], p[1]);
        const Vec2 g = lyapunov_gradient(s, sh.q, rad());
        auto l = [&](const oracle::Vec &cov) {
            return lyapunov_eval(FluidState::from_covariant({cov[0], cov[1]}), sh.q, rad());
        };
        const oracle::Vec cov{-p[0], p[1]};
        const double h = 1e-6 * std::hypot(p[0], p[1]);
        const Vec2 fd{oracle::directional(l, cov, {1.0, 0.0}, h), oracle::directional(l, cov, {0.0, 1.0}, h)};
        const double scale = std::max(norm(g), std::abs(lyapunov_eval(s, sh.q, rad())) / std::hypot(p[0], p[1]));
        worst_l = std::max(worst_l, norm(g - fd) / scale);
    }

    // Rest-point Jacobians vs finite differences of the planar field.
    double worst_j = 0.0;
    const DissipationModel models[] = {DissipationModel::ft({1.0, 0.2, 0.5}), DissipationModel::ft({1.0, 0.0, 1.0}),
                                       DissipationModel::bdn({1.0, 4.0 / 3.0, 4.0}),
                                       DissipationModel::bdn({1.0, 4.0 / 3.0, 2.0})};
    for (const auto &model : models)
        for (double s : {0.1, 0.5, 0.9}) {
            const ShockData shk = end_states(shock_from_strength(3.0, s, rad()), rad());
            for (const FluidState &rest : {shk.state_minus, shk.state_plus}) {
                const Mat2 j = profile_flow_jacobian(model, rest, rad());
                const double h = 1e-6 * norm(rest.contravariant());
                auto flow = [&](const Vec2 &psi) {
                    const Vec2 cov = planar_rhs(model, FluidState::from_contravariant(psi), shk.q, rad());
                    return Vec2{-cov.v0, cov.v1};
                };
                for (int c = 0; c < 2; ++c) {
                    Vec2 e{};
                    e[c] = h;
                    const Vec2 col = (1.0 / (2.0 * h)) * (flow(rest.contravariant() + e) - flow(rest.contravariant() - e));
                    worst_j = std::max(worst_j, norm(Vec2{j(0, c), j(1, c)} - col) / j.norm());
                }
            }
        }

    // BDN matrix vs the full four-index contraction.
    double worst_b = 0.0;
    oracle::StateSampler bs(123, 0.3, 3.0, 3.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(0.1, 5.0), dir(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto p = bs();
        const BdnCoefficients k{coef(rng), coef(rng), coef(rng)};
        const Mat2 got = profile_matrix_bdn(FluidState(p[0], p[1]), k).m;
        const auto want = oracle::bdn_full_tensor(p[0], p[1], k.eta, k.mu, k.nu);
        double scale = 1.0, diff = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const double w = want[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                scale = std::max(scale, std::abs(w));
                diff = std::max(diff, std::abs(got(a, b) - w));
            }
        worst_b = std::max(worst_b, diff / scale);
    }

    // Viscous FT action equals sigma dU^a.
    double worst_s = 0.0;
    oracle::StateSampler ss(321);
    for (int i = 0; i < 100; ++i) {
        const auto p = ss();
        const FluidState st(p[0], p[1]);
        const FtCoefficients k{coef(rng), coef(rng), 0.0};
        const Vec2 d{dir(rng), dir(rng)};
        const double sigma = (4.0 * k.eta / 3.0 + k.zeta) / (1.0 - rad().thermo(st.theta()).cs2);
        const double th = st.theta(), u0 = th * p[0], u1 = th * p[1];
        const Vec2 du{th * ((-1.0 + u0 * u0) * d.v0 + u0 * u1 * d.v1), th * (u0 * u1 * d.v0 + (1.0 + u1 * u1) * d.v1)};
        const Vec2 got = profile_matrix_ft(st, k, rad()).m * d;
        worst_s = std::max(worst_s, norm(got - sigma * du) / std::max(1.0, sigma * norm(du)));
    }

    o.pass = worst_l < 1e-6 && worst_j < 1e-5 && worst_b < 1e-12 && worst_s < 1e-10;
    note(o, "grad L %.2e (1e-6), rest Jacobian %.2e (1e-5), BDN contraction %.2e (1e-12), sigma dU %.2e (1e-10)",
         worst_l, worst_j, worst_b, worst_s);
    return o;
}

Outcome scan_determinism() {
    Outcome o;
    const auto config = shockscan::build_config({{"model.name", "bdn"},
                                                 {"model.mu", "4/3"},
                                                 {"model.nu", "4"},
                                                 {"shock.q1", "0.5, 3, 10"},
                                                 {"shock.strength", "0.05:0.95:12"}});
    auto csv = [](const std::vector<shockscan::ScanRecord> &r) {
        std::ostringstream os;
        shockscan::write_scan_csv(os, r);
        return os.str();
    };
    const std::string serial = csv(shockscan::run_scan(config, 1));
    const std::string again = csv(shockscan::run_scan(config, 1));
    const std::string parallel = csv(shockscan::run_scan(config, 4));
    o.pass = serial == again && serial == parallel;
    note(o, "36 points; repeat %s, 4 workers %s", serial == again ? "identical" : "DIFFERENT",
         serial == parallel ? "identical" : "DIFFERENT");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"viscous_profiles_monotone", viscous_profiles},
        {"heat_conducting_profiles_monotone", heat_conducting_profiles},
        {"small_chi_consistency", small_chi_consistency},
        {"end_state_root_oracle", end_state_root_oracle},
        {"characteristic_speed_oracle", characteristic_speed_oracle},
        {"sharply_causal_bdn_oscillation", sharply_causal_bdn},
        {"strictly_causal_bdn_nonexistence", strictly_causal_bdn},
        {"causality_classifier", causality_classifier},
        {"gradient_assembly_checks", gradient_assembly},
        {"scan_determinism", scan_determinism},
    };
    int unexpected = 0, failed = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const bool known = kKnownRed.count(name) != 0;
        std::printf("%s %s%s\n    %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    known ? (o.pass ? " (listed as known failing; remove it from the list)" : " (known, documented)")
                          : "",
                    o.detail.c_str());
        if (!o.pass) ++failed;
        if (o.pass == known) ++unexpected;
    }
    std::printf("%d of %zu criteria passed; %zu known failing\n", static_cast<int>(criteria.size()) - failed,
                criteria.size(), kKnownRed.size());
    return unexpected == 0 ? 0 : 1;
}

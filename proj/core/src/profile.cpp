#include <limits>
#include "shockprof/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shockprof/ode.hpp"

namespace shockprof {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::connected_monotone: return "connected_monotone";
        case Classification::connected_oscillatory: return "connected_oscillatory";
        case Classification::escaped_domain: return "escaped_domain";
        case Classification::singular_matrix: return "singular_matrix";
        case Classification::no_connection: return "no_connection";
    }
    return "unknown";
}

bool is_connected(Classification c) {
    return c == Classification::connected_monotone || c == Classification::connected_oscillatory;
}

std::string_view to_string(RestPointType t) {
    switch (t) {
        case RestPointType::source: return "source";
        case RestPointType::sink: return "sink";
        case RestPointType::saddle: return "saddle";
        case RestPointType::spiral_source: return "spiral-source";
        case RestPointType::spiral_sink: return "spiral-sink";
        case RestPointType::degenerate: return "degenerate";
    }
    return "unknown";
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

bool is_singular(const Mat2 &m, double tol_det) {
    const double n = m.norm();
    return !(std::abs(m.det()) > tol_det * n * n);
}

double relative_distance(const Vec2 &a, const Vec2 &b) { return norm(a - b) / norm(b); }

/// Marks the profile oscillatory when rho is not monotone beyond round-off.
bool rho_monotone(const std::vector<ProfileSample> &samples, double rho_minus, double rho_plus,
                  const ProfileOptions &opts) {
    const double span = rho_plus - rho_minus;
    const double noise =
        std::max(1e-12 * std::abs(span), 10.0 * (opts.abs_tol + opts.rel_tol * std::max(rho_minus, rho_plus)));
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if ((samples[i].rho - samples[i - 1].rho) * (span > 0 ? 1.0 : -1.0) < -noise) return false;
    }
    return true;
}

void center_samples(std::vector<ProfileSample> &samples, double rho_mid) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double a = samples[i - 1].rho - rho_mid;
        const double b = samples[i].rho - rho_mid;
        if ((a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0)) {
            const double w = (a == b) ? 0.0 : a / (a - b);
            const double x0 = samples[i - 1].x + w * (samples[i].x - samples[i - 1].x);
            for (auto &s : samples) s.x -= x0;
            return;
        }
    }
}

ProfileSample make_sample(double x, const FluidState &st, const FluxConstants &q, const BarotropicEos &eos) {
    ProfileSample s;
    s.x = x;
    s.psi = st.contravariant();
    s.rho = eos.rho_of_theta(st.theta());
    s.u1 = st.velocity().v1;
    s.lyapunov = lyapunov_eval(st, q, eos);
    return s;
}

}  // namespace

Vec2 flux_residual(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos) {
    const Vec2 f = flux(state, eos);
    return {f.v0 - q.q0, f.v1 - q.q1};
}

double lyapunov_eval(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos) {
    const double p = eos.at(state.theta()).p;
    const Vec2 cov = state.covariant();
    return p * state.psi1() - (q.q0 * cov.v0 + q.q1 * cov.v1);
}

Vec2 lyapunov_gradient(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos) {
    return flux_residual(state, q, eos);
}

Vec2 planar_rhs(const DissipationModel &model, const FluidState &state, const FluxConstants &q,
                const BarotropicEos &eos, double tol_det) {
    const Mat2 m = model.matrix(state, eos).m;
    if (is_singular(m, tol_det)) {
        throw SingularMatrixError("profile matrix singular (det " + fmt(m.det()) + ") at state (" +
                                      fmt(state.psi0()) + ", " + fmt(state.psi1()) + ")",
                                  state);
    }
    return solve(m, flux_residual(state, q, eos));
}

Mat2 profile_flow_jacobian(const DissipationModel &model, const FluidState &state, const BarotropicEos &eos) {
    const Mat2 m = model.matrix(state, eos).m;
    const Mat2 j_cov = inverse(m) * spatial_hessian(state, eos);
    return kMetric * j_cov * kMetric;
}

RestPointReport rest_point_classify(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                                    EndState which, const ProfileOptions &opts) {
    RestPointReport r;
    r.state = which == EndState::minus ? shock.state_minus : shock.state_plus;
    const Mat2 m = model.matrix(r.state, eos).m;
    r.det_m = m.det();
    if (is_singular(m, opts.tol_det)) {
        r.type = RestPointType::degenerate;
        return r;
    }
    const Mat2 j = profile_flow_jacobian(model, r.state, eos);
    r.eigenvalues = eigenvalues(j);
    const double scale = std::max(std::abs(r.eigenvalues[0]), std::abs(r.eigenvalues[1]));
    const double smallest = std::min(std::abs(r.eigenvalues[0]), std::abs(r.eigenvalues[1]));
    if (!(scale > 0.0) || smallest <= 1e-12 * scale) {
        r.type = RestPointType::degenerate;
        return r;
    }
    const bool complex_pair = std::abs(r.eigenvalues[1].imag()) > opts.tol_osc * std::abs(r.eigenvalues[1]);
    if (complex_pair) {
        const double re = r.eigenvalues[0].real();
        if (re > 0.0) {
            r.type = RestPointType::spiral_source;
        } else if (re < 0.0) {
            r.type = RestPointType::spiral_sink;
        } else {
            r.type = RestPointType::degenerate;
        }
        return r;
    }
    const double l0 = r.eigenvalues[0].real();
    const double l1 = r.eigenvalues[1].real();
    r.eigenvectors = {eigenvector(j, l0), eigenvector(j, l1)};
    if (l0 > 0.0) {
        r.type = RestPointType::source;
    } else if (l1 < 0.0) {
        r.type = RestPointType::sink;
    } else {
        r.type = RestPointType::saddle;
    }
    return r;
}

bool oscillation_detect(const RestPointReport &report, double tol_osc) {
    for (const auto &l : report.eigenvalues) {
        if (std::abs(l.imag()) > tol_osc * std::abs(l)) return true;
    }
    return false;
}

double velocity_of_energy_derivative(double rho, const FluxConstants &q) {
    const double r = (rho + q.q1) / q.q0;
    const double w = r * r - 1.0;
    return -r / (q.q0 * w * std::sqrt(w));
}

double scalar_profile_rhs(double rho, const FluxConstants &q, const BarotropicEos &eos) {
    const double p = eos.energy_pressure(rho).p;
    const double u1 = velocity_of_energy(rho, q);
    return (rho + p) * u1 * u1 + p - q.q1;
}

ProfileResult scalar_profile_ft(const ShockData &shock, const BarotropicEos &eos, const FtCoefficients &coeffs,
                                const ProfileOptions &opts) {
    if (coeffs.chi != 0.0) throw ConfigError("scalar profile reduction requires chi = 0");
    if (!shock.lax_ok) throw DomainError("scalar profile requested for a non-Lax shock");
    coeffs.validate();

    const FluxConstants q = shock.q;
    const double rho_minus = shock.rho_minus;
    const double rho_plus = shock.rho_plus;
    const double span = rho_plus - rho_minus;
    const double rho_mid = 0.5 * (rho_minus + rho_plus);
    const auto model = DissipationModel::ft(coeffs);

    ProfileResult result;
    result.method = "scalar";
    result.rest_minus = rest_point_classify(model, shock, eos, EndState::minus, opts);
    result.rest_plus = rest_point_classify(model, shock, eos, EndState::plus, opts);

    auto state_at = [&](double rho) {
        return FluidState::from_temperature_velocity(eos.theta_of_energy(rho), velocity_of_energy(rho, q));
    };

    // The interior must carry R < 0 and sigma U' < 0 throughout.
    constexpr int grid = 256;
    for (int i = 1; i < grid; ++i) {
        const double rho = rho_minus + span * static_cast<double>(i) / grid;
        const double sigma = ft_coefficients_at(coeffs, state_at(rho), eos).sigma;
        const double lhs = sigma * velocity_of_energy_derivative(rho, q);
        if (!(lhs < 0.0)) {
            result.classification = Classification::singular_matrix;
            result.diagnostic = "sigma U'(rho) vanishes or changes sign at rho=" + fmt(rho);
            return result;
        }
        if (!(scalar_profile_rhs(rho, q, eos) < 0.0)) {
            result.classification = Classification::no_connection;
            result.diagnostic = "R(rho) changes sign inside (rho-, rho+) at rho=" + fmt(rho);
            return result;
        }
    }

    auto rhs = [&](double, const std::array<double, 1> &y, std::array<double, 1> &dy) -> bool {
        const double rho = y[0];
        if (!(rho > eos.rho_min()) || !(rho < shock.rho_bar)) return false;
        const double sigma = ft_coefficients_at(coeffs, state_at(rho), eos).sigma;
        dy[0] = scalar_profile_rhs(rho, q, eos) / (sigma * velocity_of_energy_derivative(rho, q));
        return std::isfinite(dy[0]);
    };

    OdeOptions ode;
    ode.rel_tol = opts.rel_tol;
    ode.abs_tol = opts.abs_tol;
    ode.max_steps = opts.max_steps;
    const double end_tol = opts.scalar_end_tol * span;
    const double q_scale = std::hypot(q.q0, q.q1);

    auto run = [&](double t_end, double target, std::vector<std::pair<double, double>> &out) -> bool {
        bool reached = false;
        integrate_dopri5<1>(
            rhs, 0.0, {rho_mid}, t_end, ode, [&](const DenseStep<1> &step) {
                std::array<double, 1> mid_dy{};
                const auto mid = step.state(0.5);
                if (rhs(0.0, mid, mid_dy)) {
                    // Residual of sigma U' rho' = R, relative to the flux scale.
                    const double d = step.derivative(0.5)[0];
                    const double rho = mid[0];
                    const double lhs_coeff =
                        ft_coefficients_at(coeffs, state_at(rho), eos).sigma * velocity_of_energy_derivative(rho, q);
                    result.max_residual =
                        std::max(result.max_residual, std::abs(lhs_coeff * (d - mid_dy[0])) / q_scale);
                }
                const double rho = step.y1[0];
                out.emplace_back(step.t0 + step.h, rho);
                if (std::abs(target - rho) <= end_tol || (target - rho) * (target - rho_mid) < 0.0) {
                    reached = true;
                    return false;
                }
                return true;
            });
        return reached;
    };

    std::vector<std::pair<double, double>> forward;
    std::vector<std::pair<double, double>> backward;
    const bool ok_plus = run(1e300, rho_plus, forward);
    const bool ok_minus = run(-1e300, rho_minus, backward);

    std::vector<std::pair<double, double>> path;
    path.reserve(forward.size() + backward.size() + 1);
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) path.push_back(*it);
    path.emplace_back(0.0, rho_mid);
    path.insert(path.end(), forward.begin(), forward.end());

    result.samples.reserve(path.size());
    for (const auto &[x, rho] : path) {
        const double r = std::clamp(rho, rho_minus, rho_plus);
        result.samples.push_back(make_sample(x, state_at(r), q, eos));
    }
    result.endpoint_error_minus = relative_distance(result.samples.front().psi, shock.state_minus.contravariant());
    result.endpoint_error_plus = relative_distance(result.samples.back().psi, shock.state_plus.contravariant());

    if (!ok_plus || !ok_minus) {
        result.classification = Classification::no_connection;
        result.diagnostic = "integration stalled before reaching an end state";
        return result;
    }
    result.classification = rho_monotone(result.samples, rho_minus, rho_plus, opts) ? Classification::connected_monotone
                                                                               : Classification::connected_oscillatory;
    return result;
}

namespace {

enum class FieldStatus { ok, escaped, singular, stalled };

struct ShotOutcome {
    Classification classification = Classification::no_connection;
    std::vector<ProfileSample> samples;
    double max_residual = 0.0;
    std::string diagnostic;
};

class Shooter {
public:
    Shooter(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
            const ProfileOptions &opts)
        : model_(model), shock_(shock), eos_(eos), opts_(opts), amplitude_(shock.amplitude()),
          q_scale_(std::hypot(shock.q.q0, shock.q.q1)) {}

    /// Integrates from `seed` with x running in direction `x_sign`, aiming at `target`.
    ShotOutcome shoot(const Vec2 &start, const Vec2 &seed, double x_sign, const RestPointReport &target) {
        ShotOutcome out;
        const Vec2 target_psi = target.state.contravariant();
        const double det_sign = model_.matrix(FluidState::from_contravariant(start), eos_).m.det() > 0.0 ? 1.0 : -1.0;
        FieldStatus last_failure = FieldStatus::ok;

        // y = (psi0, psi1, arclength), integrated in x; the arclength is a
        // quadrature used only for the budget.
        auto field = [&](const std::array<double, 3> &y, std::array<double, 3> &dy) -> FieldStatus {
            if (!FluidState::in_domain(y[0], y[1])) return FieldStatus::escaped;
            const FluidState st(y[0], y[1]);
            const double theta = st.theta();
            if (!(theta > eos_.theta_min()) || !(theta < eos_.theta_max())) return FieldStatus::escaped;
            const double rho = eos_.rho_of_theta(theta);
            if (!(rho > 0.0) || !(rho < shock_.rho_bar)) return FieldStatus::escaped;
            Mat2 m;
            try {
                m = model_.matrix(st, eos_).m;
            } catch (const CausalityError &) {
                return FieldStatus::escaped;
            }
            if (is_singular(m, opts_.tol_det) || (m.det() > 0.0 ? 1.0 : -1.0) != det_sign) {
                return FieldStatus::singular;
            }
            const Vec2 v_cov = solve(m, flux_residual(st, shock_.q, eos_));
            const Vec2 v{-v_cov.v0, v_cov.v1};
            const double speed = norm(v);
            if (!std::isfinite(speed)) return FieldStatus::stalled;
            dy[0] = v.v0;
            dy[1] = v.v1;
            dy[2] = x_sign * speed;
            return FieldStatus::ok;
        };
        auto rhs = [&](double, const std::array<double, 3> &y, std::array<double, 3> &dy) -> bool {
            const FieldStatus s = field(y, dy);
            if (s != FieldStatus::ok) last_failure = s;
            return s == FieldStatus::ok;
        };

        // Within tol_conn of the amplitude and, for relative errors, of |target|.
        const double conn_tol = opts_.tol_conn * std::min(amplitude_, norm(target_psi));
        const double spiral_ball = opts_.tol_spiral * amplitude_;
        const bool target_spiral = oscillation_detect(target, opts_.tol_osc);
        bool hit = false;
        bool spiral_accept = false;
        bool returned = false;
        bool left_start = false;
        double winding_angle = 0.0;
        double last_angle = 0.0;
        bool tracking = false;
        double next_winding = 2.0 * std::numbers::pi;
        std::vector<double> winding_radii;

        out.samples.push_back(make_sample(0.0, FluidState::from_contravariant(seed), shock_.q, eos_));

        OdeOptions ode;
        ode.rel_tol = opts_.rel_tol;
        ode.abs_tol = opts_.abs_tol;
        ode.max_steps = opts_.max_steps;
        ode.controlled = 2;
        const double budget = opts_.arclength_budget * amplitude_;
        bool budget_exhausted = false;

        const OdeStatus status = integrate_dopri5<3>(
            rhs, 0.0, {seed.v0, seed.v1, 0.0}, x_sign * std::numeric_limits<double>::max(), ode,
            [&](const DenseStep<3> &step) {
                std::array<double, 3> f{};
                const auto mid = step.state(0.5);
                if (field(mid, f) == FieldStatus::ok) {
                    // Residual of M psi' = F with psi' from the dense derivative.
                    const auto d = step.derivative(0.5);
                    const FluidState st(mid[0], mid[1]);
                    const Vec2 lhs = model_.matrix(st, eos_).m * Vec2{-d[0], d[1]};
                    out.max_residual =
                        std::max(out.max_residual, norm(lhs - flux_residual(st, shock_.q, eos_)) / q_scale_);
                }
                if (step.y1[2] > budget) {
                    budget_exhausted = true;
                    return false;
                }
                const Vec2 psi{step.y1[0], step.y1[1]};
                out.samples.push_back(
                    make_sample(step.t0 + step.h, FluidState::from_contravariant(psi), shock_.q, eos_));

                const Vec2 rel = psi - target_psi;
                const double dist = norm(rel);
                if (dist <= conn_tol) {
                    hit = true;
                    return false;
                }
                const double from_start = norm(psi - start);
                // Leaving must clear the connection ball too, or a tiny offset
                // would count as a return on its first steps.
                if (from_start > 100.0 * std::max(norm(seed - start), conn_tol)) left_start = true;
                if (left_start && from_start <= conn_tol) {
                    returned = true;
                    return false;
                }
                if (target_spiral && dist <= spiral_ball) {
                    const double angle = std::atan2(rel.v1, rel.v0);
                    if (!tracking) {
                        tracking = true;
                        last_angle = angle;
                    } else {
                        double d_angle = angle - last_angle;
                        if (d_angle > std::numbers::pi) d_angle -= 2.0 * std::numbers::pi;
                        if (d_angle < -std::numbers::pi) d_angle += 2.0 * std::numbers::pi;
                        winding_angle += std::abs(d_angle);
                        last_angle = angle;
                        if (winding_angle >= next_winding) {
                            next_winding += 2.0 * std::numbers::pi;
                            winding_radii.push_back(dist);
                            const std::size_t n = winding_radii.size();
                            if (n >= 4 && winding_radii[n - 1] < winding_radii[n - 2] &&
                                winding_radii[n - 2] < winding_radii[n - 3] &&
                                winding_radii[n - 3] < winding_radii[n - 4]) {
                                spiral_accept = true;
                                return false;
                            }
                        }
                    }
                }
                return true;
            });

        if (hit) {
            out.classification = Classification::connected_monotone;
        } else if (spiral_accept) {
            out.classification = Classification::connected_oscillatory;
        } else if (returned) {
            out.classification = Classification::no_connection;
            out.diagnostic = "orbit returned to its starting rest point";
        } else if (status == OdeStatus::rhs_failed || status == OdeStatus::step_underflow) {
            switch (last_failure) {
                case FieldStatus::escaped:
                    out.classification = Classification::escaped_domain;
                    out.diagnostic = "orbit left the admissible state domain";
                    break;
                case FieldStatus::singular:
                    out.classification = Classification::singular_matrix;
                    out.diagnostic = "profile matrix became singular along the orbit";
                    break;
                default:
                    out.classification = Classification::no_connection;
                    out.diagnostic = "orbit stalled away from the target";
                    break;
            }
        } else if (budget_exhausted || status == OdeStatus::finished) {
            out.classification = Classification::no_connection;
            out.diagnostic = "arclength budget exhausted";
        } else {
            out.classification = Classification::no_connection;
            out.diagnostic = "step budget exhausted";
        }
        if (!out.samples.empty()) {
            const ProfileSample &last = out.samples.back();
            out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + std::string("final state (") + fmt(last.psi.v0) +
                              ", " + fmt(last.psi.v1) + ")";
        }
        return out;
    }

private:
    const DissipationModel &model_;
    const ShockData &shock_;
    const BarotropicEos &eos_;
    const ProfileOptions &opts_;
    double amplitude_;
    double q_scale_;
};

struct Seed {
    Vec2 start;
    Vec2 point;
    double x_sign;
    bool forward;  ///< starts at psi-
};

}  // namespace

ProfileResult shoot_heteroclinic(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                                 const ProfileOptions &opts) {
    if (!shock.lax_ok) throw DomainError("heteroclinic shooting requested for a non-Lax shock");
    model.validate_for(eos);

    ProfileResult result;
    result.rest_minus = rest_point_classify(model, shock, eos, EndState::minus, opts);
    result.rest_plus = rest_point_classify(model, shock, eos, EndState::plus, opts);
    const RestPointReport &rm = result.rest_minus;
    const RestPointReport &rp = result.rest_plus;

    const Vec2 psi_minus = shock.state_minus.contravariant();
    const Vec2 psi_plus = shock.state_plus.contravariant();
    const double eps = opts.offset * (norm(psi_plus) + shock.amplitude());

    auto is_repeller = [](RestPointType t) { return t == RestPointType::source || t == RestPointType::spiral_source; };
    auto is_attractor = [](RestPointType t) { return t == RestPointType::sink || t == RestPointType::spiral_sink; };

    if (rm.type == RestPointType::degenerate || rp.type == RestPointType::degenerate) {
        const bool singular = is_singular(model.matrix(shock.state_minus, eos).m, opts.tol_det) ||
                              is_singular(model.matrix(shock.state_plus, eos).m, opts.tol_det);
        result.classification = singular ? Classification::singular_matrix : Classification::no_connection;
        result.diagnostic = "degenerate end state";
        result.method = "none";
        return result;
    }

    // Seeds ordered so that the first one points towards the opposite end state.
    std::vector<Seed> seeds;
    auto add_pair = [&](const Vec2 &start, const Vec2 &dir, double x_sign, bool forward, const Vec2 &towards) {
        const double s = dot(dir, towards - start) >= 0.0 ? 1.0 : -1.0;
        seeds.push_back({start, start + (s * eps) * dir, x_sign, forward});
        seeds.push_back({start, start - (s * eps) * dir, x_sign, forward});
    };
    if (rp.type == RestPointType::saddle) {
        result.method = "backward-from-plus";
        if (!is_repeller(rm.type)) {
            result.classification = Classification::no_connection;
            result.diagnostic = "psi- is not repelling (" + std::string(to_string(rm.type)) + ")";
            return result;
        }
        add_pair(psi_plus, rp.eigenvectors[0], -1.0, false, psi_minus);
    } else if (rm.type == RestPointType::saddle) {
        result.method = "forward-from-minus";
        if (!is_attractor(rp.type)) {
            result.classification = Classification::no_connection;
            result.diagnostic = "psi+ is not attracting (" + std::string(to_string(rp.type)) + ")";
            return result;
        }
        add_pair(psi_minus, rm.eigenvectors[1], 1.0, true, psi_plus);
    } else if (is_repeller(rm.type) && is_attractor(rp.type)) {
        result.method = "forward-from-minus";
        if (rm.type == RestPointType::source) {
            add_pair(psi_minus, rm.eigenvectors[0], 1.0, true, psi_plus);
            add_pair(psi_minus, rm.eigenvectors[1], 1.0, true, psi_plus);
        } else {
            const Vec2 d = psi_plus - psi_minus;
            add_pair(psi_minus, (1.0 / norm(d)) * d, 1.0, true, psi_plus);
        }
    } else {
        result.classification = Classification::no_connection;
        result.method = "none";
        result.diagnostic = "end state types admit no connection: psi- " + std::string(to_string(rm.type)) +
                            ", psi+ " + std::string(to_string(rp.type));
        return result;
    }

    Shooter shooter(model, shock, eos, opts);
    std::optional<ShotOutcome> first_failure;
    std::string diagnostics;
    for (const Seed &seed : seeds) {
        const RestPointReport &target = seed.forward ? rp : rm;
        ShotOutcome shot = shooter.shoot(seed.start, seed.point, seed.x_sign, target);
        if (is_connected(shot.classification)) {
            auto &samples = shot.samples;
            if (!seed.forward) std::reverse(samples.begin(), samples.end());
            center_samples(samples, 0.5 * (shock.rho_minus + shock.rho_plus));
            result.samples = std::move(samples);
            result.max_residual = shot.max_residual;
            result.endpoint_error_minus = relative_distance(result.samples.front().psi, psi_minus);
            result.endpoint_error_plus = relative_distance(result.samples.back().psi, psi_plus);
            const bool oscillatory = shot.classification == Classification::connected_oscillatory ||
                                     oscillation_detect(rm, opts.tol_osc) || oscillation_detect(rp, opts.tol_osc) ||
                                     !rho_monotone(result.samples, shock.rho_minus, shock.rho_plus, opts);
            result.classification =
                oscillatory ? Classification::connected_oscillatory : Classification::connected_monotone;
            return result;
        }
        diagnostics += (diagnostics.empty() ? "" : " | ") + std::string(to_string(shot.classification)) + ": " +
                       shot.diagnostic;
        if (!first_failure) first_failure = std::move(shot);
    }

    result.classification = first_failure->classification;
    result.samples = std::move(first_failure->samples);
    result.max_residual = first_failure->max_residual;
    if (!seeds.front().forward) std::reverse(result.samples.begin(), result.samples.end());
    result.diagnostic = diagnostics;
    return result;
}

ProfileResult compute_profile(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                              const ProfileOptions &opts) {
    if (const auto *ft = std::get_if<FtModel>(&model.variant()); ft && ft->coeffs.chi == 0.0) {
        return scalar_profile_ft(shock, eos, ft->coeffs, opts);
    }
    return shoot_heteroclinic(model, shock, eos, opts);
}

double profile_width(const ProfileResult &result) {
    if (result.samples.size() < 2) return 0.0;
    const double r0 = result.samples.front().rho;
    const double r1 = result.samples.back().rho;
    auto crossing = [&](double level) {
        for (std::size_t i = 1; i < result.samples.size(); ++i) {
            const double a = result.samples[i - 1].rho - level;
            const double b = result.samples[i].rho - level;
            if ((a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0)) {
                const double w = (a == b) ? 0.0 : a / (a - b);
                return result.samples[i - 1].x + w * (result.samples[i].x - result.samples[i - 1].x);
            }
        }
        return result.samples.back().x;
    };
    return std::abs(crossing(r0 + 0.95 * (r1 - r0)) - crossing(r0 + 0.05 * (r1 - r0)));
}

double interpolate_rho(const ProfileResult &result, double x) {
    const auto &s = result.samples;
    if (s.empty()) return 0.0;
    if (x <= s.front().x) return s.front().rho;
    if (x >= s.back().x) return s.back().rho;
    const auto it = std::lower_bound(s.begin(), s.end(), x, [](const ProfileSample &a, double v) { return a.x < v; });
    const auto &b = *it;
    const auto &a = *(it - 1);
    if (b.x == a.x) return b.rho;
    const double w = (x - a.x) / (b.x - a.x);
    return a.rho + w * (b.rho - a.rho);
}

}  // namespace shockprof

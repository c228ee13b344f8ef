#include "shockprof/rankine_hugoniot.hpp"

#include <cmath>
#include <sstream>

#include "shockprof/errors.hpp"
#include "shockprof/roots.hpp"

namespace shockprof {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct GDerivs {
    double g = 0.0;
    double dg = 0.0;
    double d2g = 0.0;
};

GDerivs g_derivs(double rho, double q1, const BarotropicEos &eos) {
    const EnergyPressure e = eos.energy_pressure(rho);
    GDerivs out;
    out.g = -rho * e.p + q1 * (rho - e.p);
    out.dg = -e.p - rho * e.dp + q1 * (1.0 - e.dp);
    out.d2g = -(rho + q1) * e.d2p - 2.0 * e.dp;
    return out;
}

}  // namespace

double rho_bar(double q1, const BarotropicEos &eos) {
    if (!(q1 > 0.0)) throw DomainError("q1 must be positive");
    if (auto a = eos.linear_ratio()) return q1 / *a;
    // p~ is increasing, so solve p~(theta) = q1 in temperature.
    double lo = eos.theta_min();
    double hi = std::max(1.0, 2.0 * lo);
    while (eos.at(std::min(hi, eos.theta_max())).p < q1) {
        if (hi >= eos.theta_max()) throw DomainError("q1=" + fmt(q1) + " exceeds the EOS pressure range");
        lo = hi;
        hi *= 2.0;
    }
    hi = std::min(hi, eos.theta_max());
    const double theta = safeguarded_newton(
        [&](double t) {
            const PressureDerivs d = eos.at(t);
            return std::pair{d.p - q1, d.dp};
        },
        lo, hi);
    return eos.rho_of_theta(theta);
}

double g_eval(double rho, double q1, const BarotropicEos &eos) {
    const double top = rho_bar(q1, eos);
    const double slack = 1e-12 * top;
    if (rho < -slack || rho > top + slack) {
        throw DomainError("rho=" + fmt(rho) + " outside [0, rho_bar=" + fmt(top) + "]");
    }
    rho = std::clamp(rho, 0.0, top);
    const double p = eos.energy_pressure(rho).p;
    return -rho * p + q1 * (rho - p);
}

QMax q_max(double q1, const BarotropicEos &eos) {
    if (!(q1 > 0.0)) throw DomainError("q1 must be positive");
    QMax out;
    const double top = rho_bar(q1, eos);
    if (auto a = eos.linear_ratio()) {
        // g = -a rho^2 + q1 (1 - a) rho
        out.rho_star = q1 * (1.0 - *a) / (2.0 * *a);
        out.q = q1 * q1 * (1.0 - *a) * (1.0 - *a) / (4.0 * *a);
    } else {
        const double lo = std::max(eos.rho_min(), 0.0);
        out.rho_star = safeguarded_newton(
            [&](double rho) {
                const GDerivs d = g_derivs(rho, q1, eos);
                return std::pair{d.dg, d.d2g};
            },
            lo, top);
        out.q = g_derivs(out.rho_star, q1, eos).g;
    }
    const double gnl = eos.gnl_indicator(out.rho_star);
    if (!(gnl > 0.0)) {
        out.warning = "EOS '" + eos.name() + "' is not genuinely nonlinear at the maximizer of g (indicator " +
                      fmt(gnl) + "); Q(q1) may not be unique";
    }
    return out;
}

double velocity_of_energy(double rho, const FluxConstants &q) {
    const double r = (rho + q.q1) / q.q0;
    return 1.0 / std::sqrt(r * r - 1.0);
}

ShockData end_states(const FluxConstants &q, const BarotropicEos &eos) {
    if (!(q.q0 > 0.0) || !(q.q1 > 0.0)) throw NoShockError("flux constants must be positive");
    const QMax qm = q_max(q.q1, eos);
    const double excess = q.q0 * q.q0 - q.q1 * q.q1;
    if (!(excess > 0.0) || !(excess < qm.q)) {
        throw NoShockError("no two end states: q0^2 - q1^2 = " + fmt(excess) + " outside (0, Q=" + fmt(qm.q) + ")");
    }

    ShockData shock;
    shock.q = q;
    shock.rho_star = qm.rho_star;
    shock.q_max = qm.q;
    shock.rho_bar = rho_bar(q.q1, eos);
    shock.warning = qm.warning;

    auto residual = [&](double rho) {
        const GDerivs d = g_derivs(rho, q.q1, eos);
        return std::pair{d.g - excess, d.dg};
    };
    const double lo = std::max(eos.rho_min(), 0.0);
    try {
        shock.rho_minus = safeguarded_newton(residual, lo, qm.rho_star);
        shock.rho_plus = safeguarded_newton(residual, qm.rho_star, shock.rho_bar);
    } catch (const NumericalError &e) {
        throw NumericalError(std::string("end-state refinement failed: ") + e.what());
    }

    auto assemble = [&](double rho) {
        return FluidState::from_temperature_velocity(eos.theta_of_energy(rho), velocity_of_energy(rho, q));
    };
    shock.state_minus = assemble(shock.rho_minus);
    shock.state_plus = assemble(shock.rho_plus);
    shock.speeds_minus = char_speeds(shock.state_minus, eos);
    shock.speeds_plus = char_speeds(shock.state_plus, eos);
    shock.lax_ok = lax_classify(shock);
    return shock;
}

SpeedPair char_speeds(const FluidState &state, const BarotropicEos &eos) {
    const Mat2 mass = temporal_hessian(state, eos);
    if (!is_positive_definite(mass)) {
        std::ostringstream os;
        os.precision(17);
        os << "mass matrix dT^{a0}/dpsi not positive definite at state (" << state.psi0() << ", " << state.psi1()
           << ")";
        throw CausalityError(os.str());
    }
    const auto ev = generalized_eigenvalues(spatial_hessian(state, eos), mass);
    return {ev[0].real(), ev[1].real()};
}

bool lax_classify(const ShockData &shock) {
    return shock.speeds_minus.lambda1 > 0.0 && shock.speeds_plus.lambda1 < 0.0 && shock.speeds_plus.lambda2 > 0.0;
}

FluxConstants shock_from_strength(double q1, double s, const BarotropicEos &eos) {
    if (!(q1 > 0.0)) throw DomainError("q1 must be positive");
    if (!(s > 0.0 && s < 1.0)) throw NoShockError("shock strength must lie in (0, 1), got " + fmt(s));
    const double q = q_max(q1, eos).q;
    return {std::sqrt(q1 * q1 + (1.0 - s) * q), q1};
}

}  // namespace shockprof

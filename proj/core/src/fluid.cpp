#include "shockprof/fluid.hpp"

#include <cmath>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

FluidState::FluidState(double psi0, double psi1) : psi0_(psi0), psi1_(psi1) {
    if (!in_domain(psi0, psi1)) {
        std::ostringstream os;
        os.precision(17);
        os << "state (" << psi0 << ", " << psi1 << ") outside psi0 > |psi1|";
        throw DomainError(os.str());
    }
}

FluidState FluidState::from_temperature_velocity(double theta, double u1) {
    if (!(theta > 0.0)) throw DomainError("temperature must be positive");
    const double u0 = std::sqrt(1.0 + u1 * u1);
    return {u0 / theta, u1 / theta};
}

double FluidState::theta() const {
    // (psi0 - psi1)(psi0 + psi1) keeps precision near the light cone.
    return 1.0 / std::sqrt((psi0_ - psi1_) * (psi0_ + psi1_));
}

Vec2 FluidState::velocity() const { return theta() * contravariant(); }

Mat2 FluidState::projector() const {
    const Vec2 u = velocity();
    return kMetric + Mat2::outer(u, u);
}

double theta_of_psi(const FluidState &state) { return state.theta(); }

SpacetimeTensor2 ideal_stress(const FluidState &state, const BarotropicEos &eos) {
    const double theta = state.theta();
    const PressureDerivs d = eos.at(theta);
    const Vec2 psi = state.contravariant();
    return (theta * theta * theta * d.dp) * Mat2::outer(psi, psi) + d.p * kMetric;
}

Vec2 flux(const FluidState &state, const BarotropicEos &eos) {
    const SpacetimeTensor2 t = ideal_stress(state, eos);
    return {t(0, 1), t(1, 1)};
}

Mat2 potential_hessian(const FluidState &state, const BarotropicEos &eos, const Vec2 &covector) {
    // With h = theta^3 p', the third derivative of p~ psi^b is
    //   theta^3 h' psi^a psi^b psi^c + h (g^{ac} psi^b + g^{bc} psi^a + g^{ab} psi^c).
    const double theta = state.theta();
    const PressureDerivs d = eos.at(theta);
    const double t2 = theta * theta;
    const double h = t2 * theta * d.dp;
    const double dh = 3.0 * t2 * d.dp + t2 * theta * d.d2p;
    const Vec2 psi = state.contravariant();
    const double psi_t = dot(psi, covector);
    const Vec2 t_up = kMetric * covector;
    return (t2 * theta * dh * psi_t) * Mat2::outer(psi, psi) +
           h * (psi_t * kMetric + Mat2::outer(psi, t_up) + Mat2::outer(t_up, psi));
}

Mat2 temporal_hessian(const FluidState &state, const BarotropicEos &eos) {
    return potential_hessian(state, eos, {1.0, 0.0});
}

Mat2 spatial_hessian(const FluidState &state, const BarotropicEos &eos) {
    return potential_hessian(state, eos, {0.0, 1.0});
}

std::vector<Vec2> default_causality_directions() { return {{1.0, 1.0}, {1.0, -1.0}, {1.0, 0.0}}; }

CausalityReport check_strict_causality(const FluidState &state, const BarotropicEos &eos,
                                       const std::vector<Vec2> &directions) {
    CausalityReport report;
    report.passed = true;
    for (const Vec2 &n : directions) {
        if (!(n.v0 > 0.0) || n.v0 < std::abs(n.v1)) {
            throw DomainError("causality direction must be future non-spacelike");
        }
        CausalityDirectionReport r;
        r.direction = n;
        r.hessian = potential_hessian(state, eos, kMetric * n);
        r.eigenvalues = symmetric_eigenvalues(r.hessian);
        r.negative_definite = r.eigenvalues[1] < -1e-12 * r.hessian.norm();
        report.passed = report.passed && r.negative_definite;
        report.directions.push_back(r);
    }
    return report;
}

}  // namespace shockprof

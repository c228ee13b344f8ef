#include "shockprof/dissipation.hpp"

#include <cmath>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

void FtCoefficients::validate() const {
    if (!(eta >= 0.0) || !(zeta >= 0.0) || !(chi >= 0.0)) {
        throw ConfigError("FT coefficients must be non-negative");
    }
    if (eta == 0.0 && zeta == 0.0 && chi == 0.0) throw ConfigError("FT coefficients are all zero");
}

void BdnCoefficients::validate() const {
    if (!(eta > 0.0) || !(mu > 0.0) || !(nu > 0.0)) throw ConfigError("BDN coefficients must be positive");
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::ft_viscous: return "ft-viscous";
        case ModelKind::ft_heat: return "ft-heat";
        case ModelKind::bdn: return "bdn";
        case ModelKind::eckart: return "eckart";
    }
    return "unknown";
}

std::string_view to_string(BdnCausality c) {
    switch (c) {
        case BdnCausality::acausal: return "acausal";
        case BdnCausality::strictly_causal: return "strictly_causal";
        case BdnCausality::sharply_causal: return "sharply_causal";
    }
    return "unknown";
}

FtLocalCoefficients ft_coefficients_at(const FtCoefficients &coeffs, const FluidState &state,
                                       const BarotropicEos &eos) {
    const double theta = state.theta();
    const double cs2 = eos.thermo(theta).cs2;
    if (!(cs2 > 0.0 && cs2 < 1.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "sound speed squared " << cs2 << " not in (0, 1) at theta=" << theta;
        throw CausalityError(os.str());
    }
    FtLocalCoefficients out;
    out.sigma = ((4.0 / 3.0) * coeffs.eta + coeffs.zeta) / (1.0 - cs2) - cs2 * coeffs.chi * theta;
    out.zeta_check = coeffs.zeta + cs2 * out.sigma - cs2 * (1.0 - cs2) * coeffs.chi * theta;
    return out;
}

GradientChain psi_gradient_chain(const FluidState &state, const Vec2 &dpsi_cov) {
    const double theta = state.theta();
    const double t3 = theta * theta * theta;
    const double contraction = dot(state.contravariant(), dpsi_cov);
    GradientChain out;
    out.dtheta = t3 * contraction;
    out.du_cov = theta * dpsi_cov + (t3 * contraction) * state.covariant();
    return out;
}

// Contractions below use dU^a/dpsi_c = theta Pi^{ac} and dtheta/dpsi_c = theta^2 U^c.

ProfileMatrix profile_matrix_ft(const FluidState &state, const FtCoefficients &coeffs, const BarotropicEos &eos) {
    const auto [sigma, zeta_check] = ft_coefficients_at(coeffs, state, eos);
    const double theta = state.theta();
    const Vec2 u = state.velocity();
    const Mat2 pi = state.projector();
    const Vec2 pi_col1{pi(0, 1), pi(1, 1)};
    const Mat2 pi1_pi1 = Mat2::outer(pi_col1, pi_col1);

    // eta Pi^{ac} Pi^{1d} [dU_c/dx^d + dU_d/dx^c - 2/3 g_cd div U]
    const Mat2 shear = coeffs.eta * (pi(1, 1) * pi + (1.0 / 3.0) * pi1_pi1);
    // zeta_check Pi^{a1} div U
    const Mat2 bulk = zeta_check * pi1_pi1;
    // sigma [U^a U^1 div U - (Pi^{ac} U^1 + Pi^{1c} U^a) U^d dU_c/dx^d]; the
    // first and last pieces cancel in planar flow.
    const Mat2 longitudinal = (-sigma * u.v1 * u.v1) * pi;
    const Mat2 viscous = theta * (shear + bulk + longitudinal);
    // chi [U^a dtheta/dx_1 + U^1 dtheta/dx_a - g^{a1} U^c dtheta/dx^c] = chi U^a theta'
    const Mat2 heat = (coeffs.chi * theta * theta) * Mat2::outer(u, u);

    return {viscous + heat, coeffs.chi > 0.0 ? ModelKind::ft_heat : ModelKind::ft_viscous};
}

ProfileMatrix profile_matrix_bdn(const FluidState &state, const BdnCoefficients &coeffs) {
    const Vec2 u = state.velocity();
    const Mat2 pi = state.projector();
    const Mat2 pi_mixed = pi * kMetric;  // Pi^a_e

    Mat2 be;
    Mat2 b1;
    Mat2 b2;
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            be(a, c) = pi(a, c) * pi(1, 1) + pi(a, 1) * pi(1, c) - (2.0 / 3.0) * pi(a, 1) * pi(c, 1);
            b1(a, c) = (3.0 * u[a] * u.v1 + pi(a, 1)) * (3.0 * u[c] * u.v1 + pi(c, 1));
            double s = 0.0;
            for (int e = 0; e < 2; ++e) {
                s += (u[a] * pi_mixed(1, e) + u.v1 * pi_mixed(a, e)) * (u[c] * pi(1, e) + u.v1 * pi(c, e));
            }
            b2(a, c) = s;
        }
    }
    return {coeffs.eta * be - coeffs.mu * b1 - coeffs.nu * b2, ModelKind::bdn};
}

ProfileMatrix profile_matrix_eckart(const FluidState &state, const FtCoefficients &coeffs) {
    const double theta = state.theta();
    const Vec2 u = state.velocity();
    const Mat2 pi = state.projector();
    const Vec2 pi_col1{pi(0, 1), pi(1, 1)};
    const Mat2 pi1_pi1 = Mat2::outer(pi_col1, pi_col1);

    const Mat2 shear = coeffs.eta * (pi(1, 1) * pi + (1.0 / 3.0) * pi1_pi1);
    const Mat2 bulk = coeffs.zeta * pi1_pi1;
    // chi (Pi^{a1} U^1 + Pi^{11} U^a) theta'
    const Vec2 heat_row = u.v1 * pi_col1 + pi(1, 1) * u;
    const Mat2 heat = (coeffs.chi * theta * theta) * Mat2::outer(heat_row, u);
    return {theta * (shear + bulk) + heat, ModelKind::eckart};
}

double bdn_nu_bound(double eta, double mu) { return 1.0 / (1.0 / (3.0 * eta) - 1.0 / (9.0 * mu)); }

BdnCausality bdn_causality_class(const BdnCoefficients &coeffs) {
    coeffs.validate();
    if (coeffs.mu < (4.0 / 3.0) * coeffs.eta) return BdnCausality::acausal;
    const double bound = bdn_nu_bound(coeffs.eta, coeffs.mu);
    if (std::abs(coeffs.nu - bound) <= 1e-12 * bound) return BdnCausality::sharply_causal;
    if (coeffs.nu < bound) return BdnCausality::strictly_causal;
    return BdnCausality::acausal;
}

DissipationModel DissipationModel::ft(FtCoefficients c) {
    c.validate();
    return DissipationModel(FtModel{c});
}

DissipationModel DissipationModel::bdn(BdnCoefficients c) {
    c.validate();
    return DissipationModel(BdnModel{c});
}

DissipationModel DissipationModel::eckart(FtCoefficients c) {
    c.validate();
    return DissipationModel(EckartModel{c});
}

ModelKind DissipationModel::kind() const {
    if (const auto *ft = std::get_if<FtModel>(&model_)) {
        return ft->coeffs.chi > 0.0 ? ModelKind::ft_heat : ModelKind::ft_viscous;
    }
    if (std::holds_alternative<BdnModel>(model_)) return ModelKind::bdn;
    return ModelKind::eckart;
}

void DissipationModel::validate_for(const BarotropicEos &eos) const {
    if (std::holds_alternative<BdnModel>(model_) && eos.name() != "radiation") {
        throw ConfigError("the BDN model is defined for the radiation EOS only, got '" + eos.name() + "'");
    }
}

ProfileMatrix DissipationModel::matrix(const FluidState &state, const BarotropicEos &eos) const {
    return std::visit(
        [&](const auto &m) -> ProfileMatrix {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, FtModel>) {
                return profile_matrix_ft(state, m.coeffs, eos);
            } else if constexpr (std::is_same_v<T, BdnModel>) {
                return profile_matrix_bdn(state, m.coeffs);
            } else {
                return profile_matrix_eckart(state, m.coeffs);
            }
        },
        model_);
}

}  // namespace shockprof

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "shockprof/eos.hpp"
#include "shockprof/fluid.hpp"

namespace shockprof {

/// Shear viscosity, bulk viscosity and heat conductivity; all >= 0, not all zero.
struct FtCoefficients {
    double eta = 0.0;
    double zeta = 0.0;
    double chi = 0.0;

    /// Throws ConfigError on a negative or all-zero set.
    void validate() const;
};

/// Viscosity and the two regulator weights; all > 0.
struct BdnCoefficients {
    double eta = 0.0;
    double mu = 0.0;
    double nu = 0.0;

    void validate() const;
};

enum class ModelKind { ft_viscous, ft_heat, bdn, eckart };

std::string_view to_string(ModelKind kind);

/// M^{ac} = B^{a1c1}(psi), acting on the covariant derivative (psi_0', psi_1').
/// Not symmetric in general.
struct ProfileMatrix {
    Mat2 m;
    ModelKind kind = ModelKind::ft_viscous;
};

/// sigma and the modified bulk coefficient at the local sound speed and temperature.
struct FtLocalCoefficients {
    double sigma = 0.0;
    double zeta_check = 0.0;
};

/// Throws CausalityError if the local sound speed is not subluminal.
FtLocalCoefficients ft_coefficients_at(const FtCoefficients &coeffs, const FluidState &state,
                                       const BarotropicEos &eos);

/// Temperature and covariant velocity differentials induced by a covariant
/// differential d psi_a.
struct GradientChain {
    double dtheta = 0.0;
    Vec2 du_cov;
};

GradientChain psi_gradient_chain(const FluidState &state, const Vec2 &dpsi_cov);

ProfileMatrix profile_matrix_ft(const FluidState &state, const FtCoefficients &coeffs, const BarotropicEos &eos);

/// Verbatim contraction of eta B_E - mu B_1 - nu B_2 with psi-gradients.
ProfileMatrix profile_matrix_bdn(const FluidState &state, const BdnCoefficients &coeffs);

/// Eckart tensor contracted to the profile matrix. Reference only.
ProfileMatrix profile_matrix_eckart(const FluidState &state, const FtCoefficients &coeffs);

enum class BdnCausality { acausal, strictly_causal, sharply_causal };

std::string_view to_string(BdnCausality c);

/// (1/(3 eta) - 1/(9 mu))^{-1}, the largest causal nu.
double bdn_nu_bound(double eta, double mu);

BdnCausality bdn_causality_class(const BdnCoefficients &coeffs);

struct FtModel {
    FtCoefficients coeffs;
};
struct BdnModel {
    BdnCoefficients coeffs;
};
struct EckartModel {
    FtCoefficients coeffs;
};

/// Tagged dissipation model.
class DissipationModel {
public:
    using Variant = std::variant<FtModel, BdnModel, EckartModel>;

    static DissipationModel ft(FtCoefficients c);
    static DissipationModel bdn(BdnCoefficients c);
    static DissipationModel eckart(FtCoefficients c);

    ModelKind kind() const;
    const Variant &variant() const { return model_; }

    /// Rejects combinations the model is not defined for (BDN needs radiation).
    void validate_for(const BarotropicEos &eos) const;

    ProfileMatrix matrix(const FluidState &state, const BarotropicEos &eos) const;

private:
    explicit DissipationModel(Variant v) : model_(std::move(v)) {}
    Variant model_;
};

}  // namespace shockprof

#pragma once

#include <vector>

#include "shockprof/eos.hpp"
#include "shockprof/linalg.hpp"

namespace shockprof {

/// Minkowski metric restricted to the t-x block, diag(-1, +1).
inline constexpr Mat2 kMetric = Mat2::diag(-1.0, 1.0);

/// Symmetric 2x2 block of a contravariant rank-2 spacetime tensor.
using SpacetimeTensor2 = Mat2;

/// The active pair (psi^0, psi^1) of the four-field vector psi^alpha = U^alpha / theta.
///
/// Stores contravariant components; the covariant pair is (-psi^0, psi^1).
/// Always inside the domain psi^0 > |psi^1|.
class FluidState {
public:
    /// Throws DomainError unless psi0 > |psi1|.
    FluidState(double psi0, double psi1);

    static FluidState from_contravariant(const Vec2 &psi) { return {psi.v0, psi.v1}; }
    static FluidState from_covariant(const Vec2 &psi) { return {-psi.v0, psi.v1}; }
    /// State with temperature theta and spatial velocity u1 = U^1.
    static FluidState from_temperature_velocity(double theta, double u1);

    static bool in_domain(double psi0, double psi1) { return psi0 > std::abs(psi1); }

    double psi0() const { return psi0_; }
    double psi1() const { return psi1_; }
    Vec2 contravariant() const { return {psi0_, psi1_}; }
    Vec2 covariant() const { return {-psi0_, psi1_}; }

    double theta() const;
    /// Contravariant four-velocity block (U^0, U^1).
    Vec2 velocity() const;
    /// Three-velocity U^1 / U^0.
    double three_velocity() const { return psi1_ / psi0_; }
    /// Projector Pi^{ab} = g^{ab} + U^a U^b.
    Mat2 projector() const;

private:
    double psi0_;
    double psi1_;
};

double theta_of_psi(const FluidState &state);

/// T^{ab} = theta^3 p~'(theta) psi^a psi^b + p~(theta) g^{ab}.
SpacetimeTensor2 ideal_stress(const FluidState &state, const BarotropicEos &eos);

/// Flux column (T^{01}, T^{11}).
Vec2 flux(const FluidState &state, const BarotropicEos &eos);

/// Hessian of the potential p~(theta) psi^b T_b with respect to the covariant
/// components psi_a, for a covector T_b.
Mat2 potential_hessian(const FluidState &state, const BarotropicEos &eos, const Vec2 &covector);

/// d T^{a0} / d psi_b: the (positive definite under causality) mass matrix.
Mat2 temporal_hessian(const FluidState &state, const BarotropicEos &eos);

/// d T^{a1} / d psi_b: the Hessian H of the Lyapunov function.
Mat2 spatial_hessian(const FluidState &state, const BarotropicEos &eos);

struct CausalityDirectionReport {
    Vec2 direction;  ///< contravariant (n^0, n^1), future non-spacelike
    Mat2 hessian;    ///< contracted Hessian
    std::array<double, 2> eigenvalues{};
    bool negative_definite = false;
};

struct CausalityReport {
    std::vector<CausalityDirectionReport> directions;
    bool passed = false;
};

/// The null directions (1, +-1) and the rest-frame direction (1, 0).
std::vector<Vec2> default_causality_directions();

/// Negative-definiteness of the contracted potential Hessian for each sampled
/// direction. Sampled, not certified for all directions.
CausalityReport check_strict_causality(const FluidState &state, const BarotropicEos &eos,
                                       const std::vector<Vec2> &directions = default_causality_directions());

}  // namespace shockprof

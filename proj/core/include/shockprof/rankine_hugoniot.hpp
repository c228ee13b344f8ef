#pragma once

#include <optional>
#include <string>
#include <utility>

#include "shockprof/eos.hpp"
#include "shockprof/fluid.hpp"

namespace shockprof {

/// Flux constants q^a = T^{a1} shared by both end states. Standing-shock frame,
/// fluid moving in +x: q0 > 0, q1 > 0.
struct FluxConstants {
    double q0 = 0.0;
    double q1 = 0.0;
};

/// Characteristic speeds at a state, lambda1 <= lambda2.
struct SpeedPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

struct ShockData {
    FluxConstants q;
    double rho_minus = 0.0;  ///< upstream
    double rho_plus = 0.0;   ///< downstream
    FluidState state_minus{1.0, 0.0};
    FluidState state_plus{1.0, 0.0};
    SpeedPair speeds_minus;
    SpeedPair speeds_plus;
    double rho_star = 0.0;  ///< maximizer of g
    double q_max = 0.0;     ///< Q(q1)
    double rho_bar = 0.0;   ///< p^(rho_bar) = q1
    bool lax_ok = false;
    std::optional<std::string> warning;

    /// Euclidean distance between the end states in psi space.
    double amplitude() const { return norm(state_plus.contravariant() - state_minus.contravariant()); }
};

/// -rho p^(rho) + q1 (rho - p^(rho)), defined on [0, rho_bar].
double g_eval(double rho, double q1, const BarotropicEos &eos);

/// rho_bar with p^(rho_bar) = q1.
double rho_bar(double q1, const BarotropicEos &eos);

struct QMax {
    double rho_star = 0.0;
    double q = 0.0;
    std::optional<std::string> warning;
};

/// Interior maximizer of g and Q(q1) = g(rho_star). Warns if the fluid is not
/// genuinely nonlinear at the maximizer.
QMax q_max(double q1, const BarotropicEos &eos);

/// U(rho) = ((rho + q1)^2 / q0^2 - 1)^{-1/2}, the velocity fixed by the
/// algebraic constraint q0 u0 - (rho + q1) u1 = 0.
double velocity_of_energy(double rho, const FluxConstants &q);

/// Both end states; throws NoShockError unless q1^2 < q0^2 < q1^2 + Q(q1).
ShockData end_states(const FluxConstants &q, const BarotropicEos &eos);

/// Generalized eigenvalues of d T^{a1}/d psi relative to d T^{a0}/d psi.
/// Throws CausalityError if the mass matrix is not positive definite.
SpeedPair char_speeds(const FluidState &state, const BarotropicEos &eos);

/// Characteristics impinge: both speeds positive upstream, mixed downstream.
bool lax_classify(const ShockData &shock);

/// q0^2 = q1^2 + (1 - s) Q(q1). s -> 0 is the vanishing-amplitude (sonic)
/// limit, s -> 1 the vacuum limit rho_minus -> 0.
FluxConstants shock_from_strength(double q1, double s, const BarotropicEos &eos);

}  // namespace shockprof

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shockprof/dissipation.hpp"
#include "shockprof/errors.hpp"
#include "shockprof/rankine_hugoniot.hpp"

namespace shockprof {

enum class Classification { connected_monotone, connected_oscillatory, escaped_domain, singular_matrix, no_connection };

std::string_view to_string(Classification c);
bool is_connected(Classification c);

enum class RestPointType { source, sink, saddle, spiral_source, spiral_sink, degenerate };

std::string_view to_string(RestPointType t);

enum class EndState { minus, plus };

/// Raised by planar_rhs when the profile matrix is numerically singular.
class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string &what, const FluidState &state) : NumericalError(what), state_(state) {}
    const FluidState &state() const { return state_; }

private:
    FluidState state_;
};

struct ProfileOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    /// Connection tolerance, relative to min(amplitude |psi+ - psi-|, |end state|).
    double tol_conn = 1e-6;
    /// |det M| below tol_det |M|^2 counts as singular.
    double tol_det = 1e-10;
    /// |Im lambda| > tol_osc |lambda| counts as oscillatory.
    double tol_osc = 1e-6;
    /// Spiral acceptance ball, relative to the amplitude.
    double tol_spiral = 1e-3;
    /// Initial offset from the shooting rest point, relative to |psi+| + amplitude.
    double offset = 1e-8;
    /// Arclength budget in units of the amplitude.
    double arclength_budget = 1e4;
    long max_steps = 4'000'000;
    /// Scalar profile stops this close to an end state (relative to rho+ - rho-).
    double scalar_end_tol = 1e-10;
};

struct RestPointReport {
    FluidState state{1.0, 0.0};
    /// Eigenvalues of the linearized profile flow M^{-1} H, sorted by real part.
    std::array<std::complex<double>, 2> eigenvalues{};
    /// Contravariant eigenvectors for real eigenvalues (unit length).
    std::array<Vec2, 2> eigenvectors{};
    RestPointType type = RestPointType::degenerate;
    double det_m = 0.0;
};

struct ProfileSample {
    double x = 0.0;
    Vec2 psi;  ///< contravariant
    double rho = 0.0;
    double u1 = 0.0;
    double lyapunov = 0.0;
};

struct ProfileResult {
    std::vector<ProfileSample> samples;
    Classification classification = Classification::no_connection;
    double endpoint_error_minus = 0.0;  ///< relative distance of the first sample to psi-
    double endpoint_error_plus = 0.0;   ///< relative distance of the last sample to psi+
    RestPointReport rest_minus;
    RestPointReport rest_plus;
    /// Largest residual of the integrated ODE at step midpoints (dense output).
    double max_residual = 0.0;
    std::string method;
    std::string diagnostic;
};

/// R(rho) = (rho + p^) U(rho)^2 + p^ - q1. Vanishes at both end states and is
/// negative between them, where U'(rho) < 0 makes rho increase along the profile.
double scalar_profile_rhs(double rho, const FluxConstants &q, const BarotropicEos &eos);

/// U'(rho).
double velocity_of_energy_derivative(double rho, const FluxConstants &q);

/// Viscous (chi = 0) profile through the reduced scalar ODE sigma U'(rho) rho' = R(rho).
ProfileResult scalar_profile_ft(const ShockData &shock, const BarotropicEos &eos, const FtCoefficients &coeffs,
                                const ProfileOptions &opts = {});

/// Covariant derivative (psi_0', psi_1') = M^{-1} F. Throws SingularMatrixError.
Vec2 planar_rhs(const DissipationModel &model, const FluidState &state, const FluxConstants &q,
                const BarotropicEos &eos, double tol_det = ProfileOptions{}.tol_det);

/// F = (T^{01} - q0, T^{11} - q1).
Vec2 flux_residual(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos);

/// L = p~(theta) psi^1 - q^c psi_c.
double lyapunov_eval(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos);

/// Gradient of L with respect to the covariant components; equals F.
Vec2 lyapunov_gradient(const FluidState &state, const FluxConstants &q, const BarotropicEos &eos);

RestPointReport rest_point_classify(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                                    EndState which, const ProfileOptions &opts = {});

/// Contravariant Jacobian of the profile flow, g M^{-1} H g, at any state.
Mat2 profile_flow_jacobian(const DissipationModel &model, const FluidState &state, const BarotropicEos &eos);

bool oscillation_detect(const RestPointReport &report, double tol_osc = ProfileOptions{}.tol_osc);

/// Heteroclinic connection psi- -> psi+ by shooting along the one-dimensional
/// invariant manifold of a saddle end state (backward from psi+ when it is a
/// saddle, otherwise forward from psi-). Failures are classifications.
ProfileResult shoot_heteroclinic(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                                 const ProfileOptions &opts = {});

/// Dispatch: scalar reduction for FT without heat conduction, shooting otherwise.
ProfileResult compute_profile(const DissipationModel &model, const ShockData &shock, const BarotropicEos &eos,
                              const ProfileOptions &opts = {});

/// x-extent of the middle 90% of the rho variation.
double profile_width(const ProfileResult &result);

/// rho(x) by linear interpolation of the samples (clamped outside).
double interpolate_rho(const ProfileResult &result, double x);

}  // namespace shockprof

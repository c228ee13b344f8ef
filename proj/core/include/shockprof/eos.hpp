#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shockprof {

/// p~(theta) and its first three temperature derivatives.
struct PressureDerivs {
    double p = 0.0;
    double dp = 0.0;
    double d2p = 0.0;
    double d3p = 0.0;
};

/// Energy density, pressure and squared sound speed at one temperature.
struct Thermo {
    double rho = 0.0;
    double p = 0.0;
    double cs2 = 0.0;
};

/// p^(rho) and its first two derivatives with respect to energy density.
struct EnergyPressure {
    double p = 0.0;
    double dp = 0.0;
    double d2p = 0.0;
};

/// One term c * theta^k of a power-sum pressure law.
struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;
};

/// Pressure law of a barotropic fluid, p = p~(theta).
///
/// Construction checks p > 0, p' > 0 and p'' > 0 on a sample grid of the
/// validity interval; the last makes rho(theta) = theta p' - p strictly
/// increasing so that theta(rho) is well defined. Sound speeds >= 1 are *not*
/// rejected here; the causality checks report them.
class BarotropicEos {
public:
    using Callable = std::function<PressureDerivs(double)>;

    /// p~ = theta^4 / 3.
    static BarotropicEos radiation();
    /// p~ = theta^k, k > 1; p^(rho) = rho / (k - 1).
    static BarotropicEos power_law(double k);
    /// p~ = sum_i c_i theta^{k_i}.
    static BarotropicEos power_sum(std::vector<PowerTerm> terms, double theta_min = 0.0,
                                   double theta_max = std::numeric_limits<double>::infinity(),
                                   std::string name = {});
    /// Arbitrary analytic law; used for synthetic test fluids.
    static BarotropicEos custom(std::string name, Callable law, double theta_min, double theta_max);

    /// "radiation", "power-law:K", "poly:EXPR" or "file:PATH".
    static BarotropicEos from_spec(std::string_view spec);
    /// Parses the expression-file grammar (see README).
    static BarotropicEos from_expression_text(std::string_view text, std::string name = {});

    const std::string &name() const;
    double theta_min() const;
    double theta_max() const;

    /// If p^(rho) = a rho exactly, returns a.
    std::optional<double> linear_ratio() const;

    PressureDerivs at(double theta) const;
    double rho_of_theta(double theta) const;
    Thermo thermo(double theta) const;
    /// Inverse of rho_of_theta by safeguarded Newton; 1e-13 relative.
    double theta_of_energy(double rho) const;
    /// p^, p^', p^'' by the chain rule through theta(rho).
    EnergyPressure energy_pressure(double rho) const;
    double sound_speed2(double rho) const;
    /// Smallest energy density on the validity interval.
    double rho_min() const;

    /// (rho + p^) p^'' + 2 (1 - p^') p^'. Positive means genuinely nonlinear.
    double gnl_indicator(double rho) const;

private:
    struct Impl;
    explicit BarotropicEos(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Parses a polynomial "c1 theta^k1 + c2 theta^k2 ..." with rational or decimal
/// coefficients. Throws ConfigError on malformed input.
std::vector<PowerTerm> parse_pressure_polynomial(std::string_view expr);

/// Parses "a", "a/b", or a decimal literal. Throws ConfigError.
double parse_rational(std::string_view text);

}  // namespace shockprof

#pragma once

#include <iosfwd>
#include <string>

#include "shockprof/profile.hpp"
#include "shockprof/rankine_hugoniot.hpp"

namespace shockprof {

/// Fixed 17-significant-digit formatting used by every CSV writer.
std::string format_double(double x);

/// Flat JSON record. Keys: q0, q1, Q, rho_star, rho_bar, rho_minus, rho_plus,
/// theta_minus, theta_plus, u1_minus, u1_plus, psi0_minus, psi1_minus,
/// psi0_plus, psi1_plus, lambda1_minus, lambda2_minus, lambda1_plus,
/// lambda2_plus, lax, warning (only when present).
std::string shock_to_json(const ShockData &shock, int indent = 2);

/// Columns x, psi0, psi1, rho, u1, L.
void write_profile_csv(std::ostream &out, const ProfileResult &result);

/// classification, method, diagnostic, endpoint errors, max residual, sample
/// count, width, and both rest-point reports (type, eigenvalues, det M).
std::string profile_summary_json(const ProfileResult &result, int indent = 2);

}  // namespace shockprof

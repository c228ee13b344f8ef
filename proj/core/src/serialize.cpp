#include "shockprof/serialize.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace shockprof {

using nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string shock_to_json(const ShockData &shock, int indent) {
    ordered_json j;
    j["q0"] = shock.q.q0;
    j["q1"] = shock.q.q1;
    j["Q"] = shock.q_max;
    j["rho_star"] = shock.rho_star;
    j["rho_bar"] = shock.rho_bar;
    j["rho_minus"] = shock.rho_minus;
    j["rho_plus"] = shock.rho_plus;
    j["theta_minus"] = shock.state_minus.theta();
    j["theta_plus"] = shock.state_plus.theta();
    j["u1_minus"] = shock.state_minus.velocity().v1;
    j["u1_plus"] = shock.state_plus.velocity().v1;
    j["psi0_minus"] = shock.state_minus.psi0();
    j["psi1_minus"] = shock.state_minus.psi1();
    j["psi0_plus"] = shock.state_plus.psi0();
    j["psi1_plus"] = shock.state_plus.psi1();
    j["lambda1_minus"] = shock.speeds_minus.lambda1;
    j["lambda2_minus"] = shock.speeds_minus.lambda2;
    j["lambda1_plus"] = shock.speeds_plus.lambda1;
    j["lambda2_plus"] = shock.speeds_plus.lambda2;
    j["lax"] = shock.lax_ok;
    if (shock.warning) j["warning"] = *shock.warning;
    return j.dump(indent);
}

void write_profile_csv(std::ostream &out, const ProfileResult &result) {
    out << "x,psi0,psi1,rho,u1,L\n";
    for (const auto &s : result.samples) {
        out << format_double(s.x) << ',' << format_double(s.psi.v0) << ',' << format_double(s.psi.v1) << ','
            << format_double(s.rho) << ',' << format_double(s.u1) << ',' << format_double(s.lyapunov) << '\n';
    }
}

namespace {

ordered_json rest_point_json(const RestPointReport &r) {
    ordered_json j;
    j["type"] = std::string(to_string(r.type));
    j["psi0"] = r.state.psi0();
    j["psi1"] = r.state.psi1();
    j["det_M"] = r.det_m;
    ordered_json ev = ordered_json::array();
    for (const auto &l : r.eigenvalues) ev.push_back({{"re", l.real()}, {"im", l.imag()}});
    j["eigenvalues"] = ev;
    return j;
}

}  // namespace

std::string profile_summary_json(const ProfileResult &result, int indent) {
    ordered_json j;
    j["classification"] = std::string(to_string(result.classification));
    j["method"] = result.method;
    j["diagnostic"] = result.diagnostic;
    j["endpoint_error_minus"] = result.endpoint_error_minus;
    j["endpoint_error_plus"] = result.endpoint_error_plus;
    j["max_residual"] = result.max_residual;
    j["samples"] = result.samples.size();
    j["width"] = is_connected(result.classification) ? profile_width(result) : 0.0;
    j["rest_minus"] = rest_point_json(result.rest_minus);
    j["rest_plus"] = rest_point_json(result.rest_plus);
    return j.dump(indent);
}

}  // namespace shockprof

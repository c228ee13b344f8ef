#include "shockprof/eos.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

struct BarotropicEos::Impl {
    std::string name;
    Callable law;
    double theta_min = 0.0;
    double theta_max = std::numeric_limits<double>::infinity();
    std::optional<double> linear_ratio;
    std::function<double(double)> closed_form_inverse;
};

namespace {

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

PressureDerivs eval_power_sum(const std::vector<PowerTerm> &terms, double theta) {
    PressureDerivs out;
    for (const auto &t : terms) {
        const double k = t.exponent;
        const double c = t.coeff;
        if (k == 0.0) {
            out.p += c;
            continue;
        }
        const double base = std::pow(theta, k - 3.0);
        // theta^(k-3) is singular at 0 for small k; rebuild from theta^k there.
        if (theta == 0.0) {
            out.p += 0.0;
            out.dp += (k == 1.0) ? c : 0.0;
            out.d2p += (k == 2.0) ? 2.0 * c : 0.0;
            out.d3p += (k == 3.0) ? 6.0 * c : 0.0;
            continue;
        }
        const double t3 = theta * theta * theta;
        out.p += c * base * t3;
        out.dp += c * k * base * theta * theta;
        out.d2p += c * k * (k - 1.0) * base * theta;
        out.d3p += c * k * (k - 1.0) * (k - 2.0) * base;
    }
    return out;
}

void validate_law(const std::string &name, const BarotropicEos::Callable &law, double theta_min, double theta_max) {
    if (!(theta_min >= 0.0) || !(theta_max > theta_min)) {
        throw EosError("EOS '" + name + "': empty validity interval");
    }
    const double lo = theta_min > 0.0 ? theta_min : 1e-3;
    const double hi = std::isfinite(theta_max) ? theta_max : 1e3;
    constexpr int n = 200;
    for (int i = 0; i <= n; ++i) {
        const double theta = lo * std::pow(hi / lo, static_cast<double>(i) / n);
        const PressureDerivs d = law(theta);
        if (!(d.p > 0.0) || !(d.dp > 0.0)) {
            throw EosError("EOS '" + name + "': p or p' not positive at theta=" + format_number(theta));
        }
        if (!(d.d2p > 0.0)) {
            throw EosError("EOS '" + name + "': rho(theta) not increasing at theta=" + format_number(theta));
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_decimal(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

double parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    const double num = parse_decimal(text.substr(0, slash));
    const double den = parse_decimal(text.substr(slash + 1));
    if (den == 0.0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

std::vector<PowerTerm> parse_pressure_polynomial(std::string_view expr) {
    std::string s;
    for (char ch : expr) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ConfigError("empty pressure polynomial");

    std::vector<PowerTerm> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        }
        const std::size_t end = s.find_first_of("+-", pos);
        // A '-' right after '^' belongs to the exponent; polynomials have none.
        const std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
        if (term.empty()) throw ConfigError("dangling sign in '" + std::string(expr) + "'");

        double coeff = 1.0;
        double exponent = 0.0;
        const auto var = term.find("theta");
        std::string_view coeff_part = term.substr(0, var);
        if (var != std::string_view::npos) {
            if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.remove_suffix(1);
            std::string_view rest = term.substr(var + 5);
            exponent = 1.0;
            if (!rest.empty()) {
                if (rest.front() != '^') throw ConfigError("expected '^' in term '" + std::string(term) + "'");
                rest.remove_prefix(1);
                exponent = parse_decimal(rest);
                if (exponent < 0.0 || std::floor(exponent) != exponent) {
                    throw ConfigError("exponent must be a non-negative integer in '" + std::string(term) + "'");
                }
            }
        }
        if (!coeff_part.empty()) coeff = parse_rational(coeff_part);
        terms.push_back({sign * coeff, exponent});
        pos = end == std::string::npos ? s.size() : end;
    }
    return terms;
}

BarotropicEos::BarotropicEos(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

BarotropicEos BarotropicEos::radiation() {
    auto impl = std::make_shared<Impl>();
    impl->name = "radiation";
    impl->law = [](double theta) {
        const double t2 = theta * theta;
        return PressureDerivs{t2 * t2 / 3.0, 4.0 * t2 * theta / 3.0, 4.0 * t2, 8.0 * theta};
    };
    impl->linear_ratio = 1.0 / 3.0;
    impl->closed_form_inverse = [](double rho) { return std::sqrt(std::sqrt(rho)); };
    validate_law(impl->name, impl->law, impl->theta_min, impl->theta_max);
    return BarotropicEos(std::move(impl));
}

BarotropicEos BarotropicEos::power_law(double k) {
    if (!(k > 1.0)) throw EosError("power-law exponent must exceed 1");
    auto eos = power_sum({{1.0, k}}, 0.0, std::numeric_limits<double>::infinity(), "power-law:" + format_number(k));
    return eos;
}

BarotropicEos BarotropicEos::power_sum(std::vector<PowerTerm> terms, double theta_min, double theta_max,
                                       std::string name) {
    if (terms.empty()) throw EosError("empty pressure law");
    auto impl = std::make_shared<Impl>();
    if (name.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "poly:";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i > 0) os << '+';
            os << terms[i].coeff << "*theta^" << terms[i].exponent;
        }
        name = os.str();
    }
    impl->name = std::move(name);
    impl->theta_min = theta_min;
    impl->theta_max = theta_max;
    if (terms.size() == 1 && terms.front().exponent > 1.0 && terms.front().coeff > 0.0) {
        const double k = terms.front().exponent;
        const double scale = terms.front().coeff * (k - 1.0);
        impl->linear_ratio = 1.0 / (k - 1.0);
        impl->closed_form_inverse = [k, scale](double rho) { return std::pow(rho / scale, 1.0 / k); };
    }
    impl->law = [terms = std::move(terms)](double theta) { return eval_power_sum(terms, theta); };
    validate_law(impl->name, impl->law, impl->theta_min, impl->theta_max);
    return BarotropicEos(std::move(impl));
}

BarotropicEos BarotropicEos::custom(std::string name, Callable law, double theta_min, double theta_max) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->law = std::move(law);
    impl->theta_min = theta_min;
    impl->theta_max = theta_max;
    validate_law(impl->name, impl->law, impl->theta_min, impl->theta_max);
    return BarotropicEos(std::move(impl));
}

BarotropicEos BarotropicEos::from_expression_text(std::string_view text, std::string name) {
    std::optional<std::vector<PowerTerm>> terms;
    double theta_min = 0.0;
    double theta_max = std::numeric_limits<double>::infinity();
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string_view l = trim(line);
        if (l.empty()) continue;
        const auto eq = l.find('=');
        if (eq == std::string_view::npos) throw ConfigError("EOS file: expected 'key = value', got '" + std::string(l) + "'");
        const std::string_view key = trim(l.substr(0, eq));
        const std::string_view value = trim(l.substr(eq + 1));
        if (key == "p(theta)" || key == "p") {
            terms = parse_pressure_polynomial(value);
        } else if (key == "theta_min") {
            theta_min = parse_rational(value);
        } else if (key == "theta_max") {
            theta_max = value == "inf" ? std::numeric_limits<double>::infinity() : parse_rational(value);
        } else {
            throw ConfigError("EOS file: unknown key '" + std::string(key) + "'");
        }
    }
    if (!terms) throw ConfigError("EOS file: missing 'p(theta) = ...' line");
    return power_sum(std::move(*terms), theta_min, theta_max, std::move(name));
}

BarotropicEos BarotropicEos::from_spec(std::string_view spec) {
    spec = trim(spec);
    if (spec == "radiation") return radiation();
    if (spec.starts_with("power-law:")) return power_law(parse_rational(spec.substr(10)));
    if (spec.starts_with("poly:")) {
        return power_sum(parse_pressure_polynomial(spec.substr(5)), 0.0, std::numeric_limits<double>::infinity(),
                         std::string(spec));
    }
    if (spec.starts_with("file:")) {
        const std::string path(spec.substr(5));
        std::ifstream f(path);
        if (!f) throw ConfigError("cannot open EOS file '" + path + "'");
        std::ostringstream os;
        os << f.rdbuf();
        return from_expression_text(os.str(), std::string(spec));
    }
    throw ConfigError("unknown EOS '" + std::string(spec) + "' (expected radiation, power-law:K, poly:EXPR, file:PATH)");
}

const std::string &BarotropicEos::name() const { return impl_->name; }
double BarotropicEos::theta_min() const { return impl_->theta_min; }
double BarotropicEos::theta_max() const { return impl_->theta_max; }
std::optional<double> BarotropicEos::linear_ratio() const { return impl_->linear_ratio; }

PressureDerivs BarotropicEos::at(double theta) const {
    if (!(theta >= impl_->theta_min) || !(theta <= impl_->theta_max)) {
        throw DomainError("theta=" + format_number(theta) + " outside validity interval of EOS '" + impl_->name + "'");
    }
    return impl_->law(theta);
}

double BarotropicEos::rho_of_theta(double theta) const {
    const PressureDerivs d = at(theta);
    return theta * d.dp - d.p;
}

Thermo BarotropicEos::thermo(double theta) const {
    const PressureDerivs d = at(theta);
    Thermo t;
    t.rho = theta * d.dp - d.p;
    t.p = d.p;
    if (auto a = impl_->linear_ratio) {
        t.cs2 = *a;
    } else {
        t.cs2 = d.dp / (theta * d.d2p);
    }
    return t;
}

double BarotropicEos::rho_min() const { return rho_of_theta(impl_->theta_min); }

double BarotropicEos::theta_of_energy(double rho) const {
    const double rmin = rho_min();
    if (rho == rmin) return impl_->theta_min;
    if (!(rho > rmin)) {
        throw DomainError("energy density " + format_number(rho) + " below EOS range of '" + impl_->name + "'");
    }
    if (impl_->closed_form_inverse) {
        const double theta = impl_->closed_form_inverse(rho);
        if (theta > impl_->theta_max) {
            throw DomainError("energy density " + format_number(rho) + " above EOS range of '" + impl_->name + "'");
        }
        return theta;
    }

    double lo = std::max(impl_->theta_min, 0.0);
    double hi = std::clamp(1.0, impl_->theta_min, impl_->theta_max);
    double theta = hi;
    if (rho_of_theta(hi) >= rho) {
        double probe = hi;
        while (probe > impl_->theta_min && rho_of_theta(probe) > rho) {
            hi = probe;
            probe *= 0.5;
            if (probe < 1e-300) break;
        }
        lo = std::max(probe, impl_->theta_min);
    } else {
        lo = hi;
        hi *= 2.0;
        while (rho_of_theta(std::min(hi, impl_->theta_max)) < rho) {
            if (hi >= impl_->theta_max) {
                throw DomainError("energy density " + format_number(rho) + " above EOS range of '" + impl_->name + "'");
            }
            lo = hi;
            hi *= 2.0;
        }
        hi = std::min(hi, impl_->theta_max);
    }
    theta = 0.5 * (lo + hi);

    for (int iter = 0; iter < 200; ++iter) {
        const PressureDerivs d = impl_->law(theta);
        const double f = theta * d.dp - d.p - rho;
        if (f == 0.0) return theta;
        if (f > 0.0) {
            hi = theta;
        } else {
            lo = theta;
        }
        const double slope = theta * d.d2p;
        double next = theta - f / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - theta);
        theta = next;
        if (step <= 1e-15 * theta || hi - lo <= 1e-15 * hi) return theta;
    }
    throw NumericalError("theta(rho) did not converge for rho=" + format_number(rho));
}

EnergyPressure BarotropicEos::energy_pressure(double rho) const {
    const double theta = theta_of_energy(rho);
    const PressureDerivs d = impl_->law(theta);
    EnergyPressure out;
    out.p = d.p;
    if (auto a = impl_->linear_ratio) {
        out.dp = *a;
        out.d2p = 0.0;
        return out;
    }
    // Derivative ratios are evaluated as limits at theta = 0.
    const double th = theta > 0.0 ? theta : 1e-9;
    const PressureDerivs e = theta > 0.0 ? d : impl_->law(th);
    const double drho = th * e.d2p;
    out.dp = e.dp / drho;
    out.d2p = (th * e.d2p * e.d2p - e.dp * e.d2p - th * e.dp * e.d3p) / (drho * drho * drho);
    return out;
}

double BarotropicEos::sound_speed2(double rho) const { return energy_pressure(rho).dp; }

double BarotropicEos::gnl_indicator(double rho) const {
    const EnergyPressure e = energy_pressure(rho);
    return (rho + e.p) * e.d2p + 2.0 * (1.0 - e.dp) * e.dp;
}

}  // namespace shockprof

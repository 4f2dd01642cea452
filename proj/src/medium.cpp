#include "minnaert/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace minnaert {

void validate(const PhysicalMedium& m) {
    if (!(m.rho_b > 0.0) || !(m.rho_e > 0.0) || !(m.kappa > 0.0))
        throw std::invalid_argument("densities and bulk modulus must be positive");
    if (!(m.gamma > 0.0)) throw std::invalid_argument("damping gamma must be positive");
    if (!(m.mu_tilde > 0.0)) throw std::invalid_argument("shear modulus mu_tilde must be positive");
    if (!(3.0 * m.lambda_tilde + 2.0 * m.mu_tilde > 0.0))
        throw std::invalid_argument("Lame parameters must satisfy 3 lambda_tilde + 2 mu_tilde > 0");
}

NondimMedium nondimensionalize(const PhysicalMedium& m) {
    validate(m);
    const double sm = std::sqrt(m.mu_tilde);
    const double sp = std::sqrt(m.lambda_tilde + 2.0 * m.mu_tilde);
    const double scale = (sm + sp) * (sm + sp);
    NondimMedium nd;
    nd.mu = m.mu_tilde / scale;
    nd.lambda = m.lambda_tilde / scale;
    nd.delta = m.rho_b / m.rho_e;
    nd.c_b = std::sqrt(m.kappa / m.rho_b);
    nd.tau = nd.c_b / (std::sqrt(m.mu_tilde / m.rho_e) + std::sqrt((m.lambda_tilde + 2.0 * m.mu_tilde) / m.rho_e));
    nd.c_s = std::sqrt(nd.mu);
    nd.c_p = std::sqrt(nd.lambda + 2.0 * nd.mu);
    nd.gamma = m.gamma;
    return nd;
}

double lambda_from_mu(double mu) {
    const double cp = 1.0 - std::sqrt(mu);
    return cp * cp - 2.0 * mu;
}

NondimMedium make_nondim(double delta, double tau, double mu, double gamma, double c_b) {
    if (!(mu > 0.0) || !(mu < 1.0)) throw std::invalid_argument("nondimensional mu must lie in (0, 1)");
    NondimMedium nd;
    nd.delta = delta;
    nd.tau = tau;
    nd.mu = mu;
    nd.lambda = lambda_from_mu(mu);
    if (!(3.0 * nd.lambda + 2.0 * nd.mu > 0.0))
        throw std::invalid_argument("mu too large: 3 lambda + 2 mu must stay positive");
    nd.c_s = std::sqrt(mu);
    nd.c_p = std::sqrt(nd.lambda + 2.0 * mu);
    nd.gamma = gamma;
    nd.c_b = c_b;
    return nd;
}

cplx c_of_omega(const NondimMedium& nd, cplx omega) {
    if (omega == cplx(0.0)) throw std::domain_error("c(omega) has a pole at omega = 0");
    return 1.0 + kI * nd.gamma / omega;
}

cplx sqrt_c(cplx c) { return std::sqrt(c); }

FrequencyState frequency_state(const NondimMedium& nd, cplx omega, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("bubble radius must be positive");
    FrequencyState fs;
    fs.omega = omega;
    fs.epsilon = epsilon;
    fs.c_of_omega = c_of_omega(nd, omega);
    fs.k = omega * epsilon / nd.c_b;
    fs.k1 = fs.k * sqrt_c(fs.c_of_omega);
    return fs;
}

cplx k1_squared(const NondimMedium& nd, cplx omega, double epsilon) {
    const double s = epsilon / nd.c_b;
    return s * s * (omega * omega + kI * nd.gamma * omega);
}

}  // namespace minnaert

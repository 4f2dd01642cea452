#pragma once

#include "minnaert/types.hpp"

namespace minnaert {

// Physical inputs in SI units.
struct PhysicalMedium {
    double rho_b = 1.2;
    double rho_e = 1200.0;
    double kappa = 1.4e5;
    double gamma = 2.0;
    double lambda_tilde = 2.0e6;
    double mu_tilde = 1.0e6;
};

struct NondimMedium {
    double delta = 0.0;
    double tau = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    double c_b = 0.0;  // m/s
    double c_s = 0.0;
    double c_p = 0.0;
    double gamma = 0.0;  // 1/s, carried along because c(omega) needs it
};

struct FrequencyState {
    cplx omega;
    double epsilon = 0.0;
    cplx k;
    cplx c_of_omega;
    cplx k1;
};

// Throws std::invalid_argument when the medium is not admissible.
void validate(const PhysicalMedium& m);

NondimMedium nondimensionalize(const PhysicalMedium& m);

// Builds a nondimensional medium directly from (delta, tau, lambda, mu, gamma, c_b).
// Requires lambda and mu consistent with c_s + c_p = 1.
NondimMedium make_nondim(double delta, double tau, double mu, double gamma, double c_b = 340.0);

// Lame lambda that pairs with mu so that sqrt(mu) + sqrt(lambda + 2 mu) = 1.
double lambda_from_mu(double mu);

cplx c_of_omega(const NondimMedium& nd, cplx omega);

// Principal square root (Re >= 0). Everything downstream of k1 is even in k1,
// so the branch only matters for callers that use k1 itself.
cplx sqrt_c(cplx c);

FrequencyState frequency_state(const NondimMedium& nd, cplx omega, double epsilon);

// k1^2 = (eps / c_b)^2 (omega^2 + i gamma omega); regular at omega = 0.
cplx k1_squared(const NondimMedium& nd, cplx omega, double epsilon);

}  // namespace minnaert

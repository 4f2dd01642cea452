#include "minnaert/resonance.hpp"

#include <cmath>
#include <stdexcept>

namespace minnaert {

namespace {

// (zeta_n(k1) - 1/2) / xi_n(k1) from k1^2.
cplx helmholtz_factor(int n, cplx k1sq) {
    if (n == 0) return k1sq * reduced_ratio0(k1sq);
    return neumann_dirichlet_ratio(n, std::sqrt(k1sq));
}

}  // namespace

cplx lambda_at(int n, cplx k, cplx c, const NondimMedium& nd, Fc2Variant variant) {
    const ElasticSpectrum es = elastic_spectrum(n, k * nd.tau, nd, variant);
    return helmholtz_factor(n, k * k * c) * es.rho + nd.delta * nd.tau * nd.tau * k * k * es.eta;
}

cplx lambda_composed(int n, cplx k, cplx c, const NondimMedium& nd, Fc2Variant variant) {
    const cplx k1 = k * sqrt_c(c);
    const HelmholtzSpectrum hs = helmholtz_spectrum(n, k1);
    const ElasticSpectrum es = elastic_spectrum(n, k * nd.tau, nd, variant);
    return (-0.5 + hs.zeta) / hs.xi * es.rho + nd.delta * nd.tau * nd.tau * k * k * es.eta;
}

cplx lambda0_over_k2(cplx k, cplx c, const NondimMedium& nd) {
    const ElasticSpectrum es = elastic_spectrum(0, k * nd.tau, nd);
    return c * reduced_ratio0(k * k * c) * es.rho + nd.delta * nd.tau * nd.tau * es.eta;
}

ModalSymbol lambda_exact(int n, cplx omega, const NondimMedium& nd, double epsilon, Fc2Variant variant) {
    const FrequencyState fs = frequency_state(nd, omega, epsilon);
    const ElasticSpectrum es = elastic_spectrum(n, fs.k * nd.tau, nd, variant);
    ModalSymbol s;
    s.n = n;
    s.k = fs.k;
    s.value = helmholtz_factor(n, k1_squared(nd, omega, epsilon)) * es.rho +
              nd.delta * nd.tau * nd.tau * fs.k * fs.k * es.eta;
    return s;
}

SymbolExpansion lambda_expansion_c(int n, cplx c, const NondimMedium& nd) {
    if (n < 0) throw std::domain_error("order must be non-negative");
    const double l = nd.lambda, m = nd.mu, lp = l + 2.0 * m;
    const double t2 = nd.tau * nd.tau;
    SymbolExpansion e;
    e.n = n;
    if (n == 0) {
        e.lambda_static = 0.0;
        e.lambda_1 = -4.0 * m * c / (9.0 * lp) - nd.delta * t2 / (3.0 * lp);
        return e;
    }
    const double x = n;
    const auto [eta0, rho0] = elastic_static_limits(n, nd);
    const auto [cs, cp] = rho_second_order(n, nd);
    e.lambda_static = x * rho0;
    // n times the k^2 terms of rho_n(k tau), the c(omega) correction of the Helmholtz
    // factor, and the eta_n(0) contribution.
    e.lambda_1 = x * (cs * t2 / m + cp * t2 / lp) - c * rho0 / (2.0 * x + 3.0) + nd.delta * t2 * eta0;
    return e;
}

SymbolExpansion lambda_expansion(int n, cplx omega, const NondimMedium& nd) {
    return lambda_expansion_c(n, c_of_omega(nd, omega), nd);
}

double omega0_imag(const NondimMedium& nd) {
    return -4.0 * nd.mu * nd.gamma / (4.0 * nd.mu + 3.0 * nd.delta * nd.tau * nd.tau);
}

cplx truncated_symbol0(cplx omega, const NondimMedium& nd, double epsilon) {
    const cplx k = omega * epsilon / nd.c_b;
    return k * k * lambda_expansion(0, omega, nd).lambda_1;
}

std::vector<MinnaertResonance> solve_first_order_resonance(const NondimMedium& nd, double epsilon) {
    if (!(nd.gamma > 0.0)) throw std::invalid_argument("damping gamma must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("bubble radius must be positive");
    std::vector<MinnaertResonance> out;
    MinnaertResonance r00;
    r00.omega = 0.0;
    r00.removable = true;
    out.push_back(r00);

    // Newton on lambda_{0,1}(Omega), the non-trivial factor of the truncated symbol.
    auto g = [&nd](cplx w) { return lambda_expansion(0, w, nd).lambda_1; };
    // Seeded at -i gamma, the root in the limit delta tau^2 -> 0; the closed form is not used here.
    cplx w = cplx(0.0, -nd.gamma);
    double res = std::abs(g(w));
    int it = 0;
    while (res >= 1e-13 && it < 50) {
        const double h = 1e-7 * (1.0 + std::abs(w));
        const cplx d = (g(w + h) - g(w - h)) / (2.0 * h);
        w -= g(w) / d;
        res = std::abs(g(w));
        ++it;
    }
    if (res >= 1e-13) throw std::runtime_error("Newton iteration for the Minnaert resonance did not converge");
    MinnaertResonance r0;
    r0.omega = w;
    r0.residual = res;
    r0.iterations = it;
    out.push_back(r0);
    return out;
}

double resonance_radius(const NondimMedium& nd) { return -omega0_imag(nd) + 1.0; }

}  // namespace minnaert

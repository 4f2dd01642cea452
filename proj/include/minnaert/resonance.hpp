#pragma once

#include <string>
#include <vector>

#include "minnaert/medium.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

struct ModalSymbol {
    int n = 0;
    cplx k;
    cplx value;
};

// lambda_n at angular frequency omega for a bubble of radius epsilon (m).
// The Helmholtz factor is evaluated as k1 j_n'(k1)/j_n(k1), which depends on k1^2 only.
ModalSymbol lambda_exact(int n, cplx omega, const NondimMedium& nd, double epsilon,
                         Fc2Variant variant = Fc2Variant::Upper);

// Same symbol as a function of k with c(omega) frozen at the value c.
cplx lambda_at(int n, cplx k, cplx c, const NondimMedium& nd, Fc2Variant variant = Fc2Variant::Upper);

// Literal composition (-1/2 + zeta_n(k1)) / xi_n(k1) * rho_n(k tau) + delta tau^2 k^2 eta_n(k tau)
// with k1 = k sqrt(c). Used to cross-check lambda_at.
cplx lambda_composed(int n, cplx k, cplx c, const NondimMedium& nd, Fc2Variant variant = Fc2Variant::Upper);

// lambda_0 / k^2 = c g(k^2 c) rho_0(k tau) + delta tau^2 eta_0(k tau), g = j_0'/(z j_0).
cplx lambda0_over_k2(cplx k, cplx c, const NondimMedium& nd);

struct SymbolExpansion {
    int n = 0;
    double lambda_static = 0.0;
    cplx lambda_1;
};

// Static value lambda_n and k^2 coefficient lambda_{n,1}; c is c(omega).
SymbolExpansion lambda_expansion_c(int n, cplx c, const NondimMedium& nd);
SymbolExpansion lambda_expansion(int n, cplx omega, const NondimMedium& nd);

enum class ResonanceKind { Static, FirstOrderCorrected };

struct MinnaertResonance {
    cplx omega;
    ResonanceKind kind = ResonanceKind::FirstOrderCorrected;
    int mode_n = 0;
    bool removable = false;  // true for Omega_00 = 0, which is not a pole
    double residual = 0.0;   // |lambda_{0,1}(omega)| after Newton
    int iterations = 0;
};

// Closed form Omega_0'' = -4 mu gamma / (4 mu + 3 delta tau^2).
double omega0_imag(const NondimMedium& nd);

// Returns {Omega_00 = 0 (removable), Omega_0 from Newton on lambda_{0,1}(Omega)}.
// Throws std::runtime_error if Newton does not converge.
std::vector<MinnaertResonance> solve_first_order_resonance(const NondimMedium& nd, double epsilon);

// lambda_0 + (Omega eps / c_b)^2 lambda_{0,1}(Omega).
cplx truncated_symbol0(cplx omega, const NondimMedium& nd, double epsilon);

// Number of zeros minus poles of f inside the circle |z - center| = radius (argument principle).
template <class F>
int winding_number(F&& f, cplx center, double radius, int nodes = 512) {
    double total = 0.0;
    cplx prev = f(center + radius);
    for (int j = 1; j <= nodes; ++j) {
        const cplx cur = f(center + radius * std::exp(kI * (2.0 * kPi * j / nodes)));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

double resonance_radius(const NondimMedium& nd);

}  // namespace minnaert

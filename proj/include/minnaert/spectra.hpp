#pragma once

#include <utility>

#include "minnaert/medium.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

struct HelmholtzSpectrum {
    int n = 0;
    cplx k;
    cplx xi;
    cplx zeta;      // 1/2 - i k^2 j_n'(k) h_n(k)
    cplx zeta_alt;  // -1/2 - i k^2 j_n(k) h_n'(k)
};

HelmholtzSpectrum helmholtz_spectrum(int n, cplx k);

// (zeta_n(z) - 1/2) / xi_n(z) = z j_n'(z) / j_n(z). Even in z, so the branch of
// sqrt(c) never enters when it is evaluated at k1.
cplx neumann_dirichlet_ratio(int n, cplx z);

// j_0'(z) / (z j_0(z)), regular at z = 0 where it equals -1/3. Depends on z^2 only.
cplx reduced_ratio0(cplx z_squared);

std::pair<double, double> helmholtz_static_limits(int n);

// Small-k truncations: xi_0 = -1 - ik + 2k^2/3, xi_n = -1/(2n+1) - 2k^2/(...),
// zeta_0 = 1/2 + k^2/3, zeta_n = 1/(2(2n+1)) - k^2/(...).
cplx helmholtz_xi_expansion(int n, cplx k);
cplx helmholtz_zeta_expansion(int n, cplx k);

// Which index to use in the second bracket of the traction coefficient fc2.
// Lower uses j_{n-1} there, Upper uses j_{n+1}. The surface quadrature oracle
// agrees with Upper, so it is the default.
enum class Fc2Variant { Lower, Upper };

struct ElasticSpectrum {
    int n = 0;
    cplx k, k_s, k_p;
    cplx b, c1, d1, c2, d2;
    cplx fb, fc1, fd1, fc2, fd2;
    cplx eta, rho;
};

ElasticSpectrum elastic_spectrum(int n, cplx k, const NondimMedium& nd, Fc2Variant variant = Fc2Variant::Upper);

// eta_n for n >= 1 via the recurrence-reduced form in terms of j_n h_n / k.
cplx eta_reduced(int n, cplx k, const NondimMedium& nd);

std::pair<double, double> elastic_static_limits(int n, const NondimMedium& nd);

// (eta_n(0), rho_n(0)); n = 0 gives (-1/(3(l+2m)), 4m/(3(l+2m))).
// For n >= 1, eta_n(0) = -[2(l+m)n(n+1) + m(4n^2+4n-1)] / [m(l+2m)(2n+3)(2n+1)(2n-1)].

// Coefficients of k_s^2 and k_p^2 in the small-k expansion of rho_n, n >= 1,
// obtained from the series of the Bessel products:
//   k_s^2: -6n(n+1) / D,  k_p^2: 1/((2n+3)(2n+1)(2n-1)) + (24 - 10n(n+1)) m / ((l+2m) D),
// with D = (2n+5)(2n+3)(2n+1)(2n-1)(2n-3).
std::pair<double, double> rho_second_order(int n, const NondimMedium& nd);

// An alternative closed form of the same coefficients. It does not match
// the series of rho_n and are kept only for comparison.
std::pair<double, double> rho_second_order_alternate(int n, const NondimMedium& nd);

// Small-k truncations for the elastic families.
cplx eta0_expansion(cplx k, const NondimMedium& nd);
cplx rho_expansion(int n, cplx k, const NondimMedium& nd);

}  // namespace minnaert

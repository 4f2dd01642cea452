#include "minnaert/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "laurent.hpp"
#include "minnaert/specfun.hpp"

namespace minnaert {

namespace {

void require_nonzero(cplx k) {
    if (k == cplx(0.0)) throw std::domain_error("k = 0 is the Hankel pole; use the static limits instead");
}

struct Bess {
    cplx j[3];  // j_{n-1}, j_n, j_{n+1}
    cplx h[3];
    cplx dh;    // h_n'
};

Bess bessel_triplet(int n, cplx z) {
    Bess b{};
    for (int q = 0; q < 3; ++q) {
        const int order = n - 1 + q;
        if (order < 0) continue;
        b.j[q] = sph_bessel_j(order, z);
        b.h[q] = sph_hankel_h1(order, z);
    }
    b.dh = sph_hankel_dh1(n, z);
    return b;
}

}  // namespace

HelmholtzSpectrum helmholtz_spectrum(int n, cplx k) {
    require_nonzero(k);
    HelmholtzSpectrum s;
    s.n = n;
    s.k = k;
    const cplx j = sph_bessel_j(n, k);
    const cplx h = sph_hankel_h1(n, k);
    s.xi = -kI * k * j * h;
    s.zeta = 0.5 - kI * k * k * sph_bessel_dj(n, k) * h;
    s.zeta_alt = -0.5 - kI * k * k * j * sph_hankel_dh1(n, k);
    return s;
}

cplx neumann_dirichlet_ratio(int n, cplx z) {
    if (n == 0) return z * z * reduced_ratio0(z * z);
    return z * sph_bessel_dj(n, z) / sph_bessel_j(n, z);
}

cplx reduced_ratio0(cplx w) {
    if (std::abs(w) < 1.0) {
        // j_1(z)/z and j_0(z) as power series in w = z^2.
        cplx t1 = 1.0 / 3.0, t0 = 1.0;
        cplx s1 = t1, s0 = t0;
        for (int p = 0; p < 60; ++p) {
            t1 *= -w / (2.0 * (p + 1) * (2.0 * p + 5.0));
            t0 *= -w / (2.0 * (p + 1) * (2.0 * p + 3.0));
            s1 += t1;
            s0 += t0;
            if (std::abs(t1) < 1e-18 * std::abs(s1) && std::abs(t0) < 1e-18 * std::abs(s0)) break;
        }
        return -s1 / s0;
    }
    const cplx z = std::sqrt(w);
    return -sph_bessel_j(1, z) / (z * sph_bessel_j(0, z));
}

std::pair<double, double> helmholtz_static_limits(int n) {
    if (n < 0) throw std::domain_error("order must be non-negative");
    if (n == 0) return {-1.0, 0.5};
    return {-1.0 / (2 * n + 1), 1.0 / (2.0 * (2 * n + 1))};
}

cplx helmholtz_xi_expansion(int n, cplx k) {
    if (n == 0) return -1.0 - kI * k + 2.0 / 3.0 * k * k;
    const double d = (2.0 * n + 3.0) * (2.0 * n + 1.0) * (2.0 * n - 1.0);
    return -1.0 / (2.0 * n + 1.0) - 2.0 / d * k * k;
}

cplx helmholtz_zeta_expansion(int n, cplx k) {
    if (n == 0) return 0.5 + k * k / 3.0;
    const double d = (2.0 * n + 3.0) * (2.0 * n + 1.0) * (2.0 * n - 1.0);
    return 1.0 / (2.0 * (2.0 * n + 1.0)) - k * k / d;
}

namespace {

template <class T>
struct BesselSet {
    T j[3];  // j_{n-1}, j_n, j_{n+1}
    T h[3];
};

template <class T>
struct CoefficientTable {
    T c1, d1, c2, d2, fc1, fd1, fc2, fd2;
};

// Single-layer and traction coefficients for n >= 1. T is either cplx (direct
// evaluation) or a Laurent series in k (small-argument path).
template <class T>
CoefficientTable<T> coefficient_table(int n, const T& ks, const T& kp, const BesselSet<T>& S, const BesselSet<T>& P,
                                      double mu, double lp, Fc2Variant variant) {
    const double nn = n;
    const double m2 = 2.0 * nn + 1.0;
    const int q = (variant == Fc2Variant::Lower) ? 0 : 2;
    CoefficientTable<T> e;
    e.c1 = -kI * (S.j[0] * S.h[0] * ks * ((nn + 1.0) / (mu * m2)) + P.j[0] * P.h[0] * kp * (nn / (lp * m2)));
    e.d1 = -kI * (S.j[0] * S.h[2] * ks * (nn / (mu * m2)) - P.j[0] * P.h[2] * kp * (nn / (lp * m2)));
    e.c2 = -kI * (S.j[2] * S.h[0] * ks * ((nn + 1.0) / (mu * m2)) - P.j[2] * P.h[0] * kp * ((nn + 1.0) / (lp * m2)));
    e.d2 = -kI * (S.j[2] * S.h[2] * ks * (nn / (mu * m2)) + P.j[2] * P.h[2] * kp * ((nn + 1.0) / (lp * m2)));

    e.fc1 = (-2.0 * (nn - 1.0)) * kI *
                (S.j[0] * S.h[0] * ks * ((nn + 1.0) / m2) + P.j[0] * P.h[0] * kp * (mu * nn / (lp * m2))) +
            kI * (S.j[0] * S.h[1] * ks * ks * (nn + 1.0) + P.j[0] * P.h[1] * kp * kp * nn) / m2;
    e.fd1 = (2.0 * nn * (nn + 2.0)) * kI * (S.j[0] * S.h[2] * ks / m2 - P.j[0] * P.h[2] * kp * (mu / (lp * m2))) +
            nn * kI * (P.j[0] * P.h[1] * kp * kp - S.j[0] * S.h[1] * ks * ks) / m2;
    e.fc2 = (-2.0 * (nn * nn - 1.0)) * kI * (S.j[2] * S.h[0] * ks / m2 - P.j[2] * P.h[0] * kp * (mu / (lp * m2))) -
            (nn + 1.0) * kI * (P.j[q] * P.h[1] * kp * kp - S.j[q] * S.h[1] * ks * ks) / m2;
    e.fd2 = (2.0 * (nn + 2.0)) * kI *
                (S.j[2] * S.h[2] * ks * (nn / m2) + P.j[2] * P.h[2] * kp * (mu * (nn + 1.0) / (lp * m2))) -
            kI * (S.j[2] * S.h[1] * ks * ks * nn + P.j[2] * P.h[1] * kp * kp * (nn + 1.0)) / m2;
    return e;
}

constexpr double kLaurentSwitch = 0.5;

BesselSet<detail::Laurent> laurent_set(int n, double inv_c, int max_power) {
    BesselSet<detail::Laurent> b;
    for (int q = 0; q < 3; ++q) {
        const int order = n - 1 + q;
        b.j[q] = detail::series_j_scaled(order, inv_c, max_power);
        b.h[q] = b.j[q] + kI * detail::series_y_scaled(order, inv_c, max_power);
    }
    return b;
}

}  // namespace

ElasticSpectrum elastic_spectrum(int n, cplx k, const NondimMedium& nd, Fc2Variant variant) {
    require_nonzero(k);
    if (n < 0) throw std::domain_error("order must be non-negative");
    const double mu = nd.mu;
    const double lp = nd.lambda + 2.0 * mu;
    ElasticSpectrum e;
    e.n = n;
    e.k = k;
    e.k_s = k / nd.c_s;
    e.k_p = k / nd.c_p;
    const cplx ks = e.k_s, kp = e.k_p;
    const Bess S = bessel_triplet(n, ks);
    const Bess P = bessel_triplet(n, kp);
    const double nn = n;
    const double m2 = 2.0 * nn + 1.0;

    e.b = -kI * ks * S.j[1] * S.h[1] / mu;
    e.fb = -kI * ks * S.j[1] * (ks * S.dh - S.h[1]);

    if (n == 0) {
        // Only the N_1 block survives; see the n = 0 reductions of eta and rho.
        e.d2 = -kI * P.j[2] * P.h[2] * kp / lp;
        e.fd2 = kI * (4.0 * P.j[2] * P.h[2] * kp * mu / lp - P.j[2] * P.h[1] * kp * kp);
        e.eta = e.d2;
        e.rho = e.fd2;
        return e;
    }

    BesselSet<cplx> Sd, Pd;
    for (int q = 0; q < 3; ++q) {
        Sd.j[q] = S.j[q];
        Sd.h[q] = S.h[q];
        Pd.j[q] = P.j[q];
        Pd.h[q] = P.h[q];
    }
    const CoefficientTable<cplx> t = coefficient_table<cplx>(n, ks, kp, Sd, Pd, mu, lp, variant);
    e.c1 = t.c1;
    e.d1 = t.d1;
    e.c2 = t.c2;
    e.d2 = t.d2;
    e.fc1 = t.fc1;
    e.fd1 = t.fd1;
    e.fc2 = t.fc2;
    e.fd2 = t.fd2;

    if (std::abs(ks) < kLaurentSwitch) {
        // The singular parts of the individual coefficients cancel in eta and rho;
        // summing them as series avoids the cancellation error of order eps / k^2.
        using detail::Laurent;
        const int max_power = 40 + n + 2;
        const Laurent lks = Laurent::monomial(1.0 / nd.c_s, 1);
        const Laurent lkp = Laurent::monomial(1.0 / nd.c_p, 1);
        const auto L = coefficient_table<Laurent>(n, lks, lkp, laurent_set(n, 1.0 / nd.c_s, max_power),
                                                  laurent_set(n, 1.0 / nd.c_p, max_power), mu, lp, variant);
        const Laurent eta = (nn * (L.c1 + L.c2) + (nn + 1.0) * (L.d1 + L.d2)) / m2;
        const Laurent rho = (nn * (L.fc1 + L.fc2) + (nn + 1.0) * (L.fd1 + L.fd2)) / m2;
        e.eta = eta.regular_value(k);
        e.rho = rho.regular_value(k);
        return e;
    }
    e.eta = (nn * (e.c1 + e.c2) + (nn + 1.0) * (e.d1 + e.d2)) / m2;
    e.rho = (nn * (e.fc1 + e.fc2) + (nn + 1.0) * (e.fd1 + e.fd2)) / m2;
    return e;
}

cplx eta_reduced(int n, cplx k, const NondimMedium& nd) {
    require_nonzero(k);
    if (n < 1) throw std::domain_error("eta_reduced needs n >= 1");
    const double lp = nd.lambda + 2.0 * nd.mu;
    const cplx ks = k / nd.c_s, kp = k / nd.c_p;
    const double nn = n, m2 = 2.0 * nn + 1.0;
    const cplx t1 = nn * (nn + 1.0) * sph_bessel_j(n, ks) * sph_hankel_h1(n, ks) / (nd.mu * ks);
    const cplx t2 = nn * (nn + 1.0) * sph_bessel_j(n, kp) * sph_hankel_h1(n, kp) / (lp * kp);
    const cplx t3 = nn * sph_bessel_j(n - 1, kp) * sph_hankel_h1(n - 1, kp) * kp / (lp * m2);
    const cplx t4 = (nn + 1.0) * sph_bessel_j(n + 1, kp) * sph_hankel_h1(n + 1, kp) * kp / (lp * m2);
    return -kI * (t1 - t2 + t3 + t4);
}

std::pair<double, double> elastic_static_limits(int n, const NondimMedium& nd) {
    const double l = nd.lambda, m = nd.mu, lp = l + 2.0 * m;
    if (n < 0) throw std::domain_error("order must be non-negative");
    if (n == 0) return {-1.0 / (3.0 * lp), 4.0 * m / (3.0 * lp)};
    const double x = n;
    const double eta = -(2.0 * (l + m) * x * (x + 1.0) + m * (4.0 * x * x + 4.0 * x - 1.0)) /
                       (m * lp * (2 * x + 3) * (2 * x + 1) * (2 * x - 1));
    const double rho = ((l + m) * x * (8 * x * x * x + 16 * x * x + 4 * x - 1) +
                        m * (2 * x + 1) * (4 * x * x * x + 12 * x * x + 5 * x - 4)) /
                       (lp * (2 * x + 3) * (2 * x + 1) * (2 * x + 1) * (2 * x - 1));
    return {eta, rho};
}

std::pair<double, double> rho_second_order(int n, const NondimMedium& nd) {
    if (n < 1) throw std::domain_error("rho_second_order needs n >= 1");
    const double m = nd.mu, lp = nd.lambda + 2.0 * m;
    const double x = n;
    const double base = (2 * x + 5) * (2 * x + 3) * (2 * x + 1) * (2 * x - 1) * (2 * x - 3);
    const double cs = -6.0 * x * (x + 1.0) / base;
    const double cp = 1.0 / ((2 * x + 3) * (2 * x + 1) * (2 * x - 1)) + (24.0 - 10.0 * x * (x + 1.0)) * m / (lp * base);
    return {cs, cp};
}

std::pair<double, double> rho_second_order_alternate(int n, const NondimMedium& nd) {
    if (n < 1) throw std::domain_error("rho_second_order needs n >= 1");
    const double m = nd.mu, lp = nd.lambda + 2.0 * m;
    const double x = n;
    const double base = (2 * x + 5) * (2 * x + 3) * std::pow(2 * x + 1, 3) * (2 * x - 1) * (2 * x - 3);
    const double cs = -2.0 * x * (x + 1.0) * (4 * x * x + 4 * x + 33) / base;
    const double cp =
        (-2.0 * m * (2 * x + 1) * (10 * x * x * x + 15 * x * x - 19 * x - 12) + lp * (2 * x + 5) * (2 * x - 3)) /
        (lp * base);
    return {cs, cp};
}

cplx eta0_expansion(cplx k, const NondimMedium& nd) {
    const double lp = nd.lambda + 2.0 * nd.mu;
    const cplx kp = k / nd.c_p;
    return -1.0 / (3.0 * lp) - 2.0 / (15.0 * lp) * kp * kp;
}

cplx rho_expansion(int n, cplx k, const NondimMedium& nd) {
    const double l = nd.lambda, m = nd.mu, lp = l + 2.0 * m;
    const cplx ks = k / nd.c_s, kp = k / nd.c_p;
    if (n == 0) return 4.0 * m / (3.0 * lp) - (5.0 * l + 2.0 * m) / (15.0 * lp) * kp * kp;
    const auto [cs, cp] = rho_second_order(n, nd);
    return elastic_static_limits(n, nd).second + cs * ks * ks + cp * kp * kp;
}

}  // namespace minnaert

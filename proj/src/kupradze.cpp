#include "minnaert/kupradze.hpp"

#include <cmath>
#include <stdexcept>

namespace minnaert {

namespace {

constexpr double kSeriesSwitch = 0.5;
constexpr double k4Pi = 4.0 * kPi;

RadialKernel radial_closed(double r, cplx k, const NondimMedium& nd) {
    const cplx ks = k / nd.c_s, kp = k / nd.c_p;
    const cplx Es = std::exp(kI * ks * r), Ep = std::exp(kI * kp * r);
    auto a3 = [r](cplx kk) { return 3.0 - 3.0 * kI * kk * r - kk * kk * r * r; };
    auto a1 = [r](cplx kk) { return kI * kk * r - 1.0; };
    auto a15 = [r](cplx kk) {
        const cplx kr = kk * r;
        return -15.0 + 15.0 * kI * kr + 6.0 * kr * kr - kI * kr * kr * kr;
    };
    const cplx den = k4Pi * k * k;
    RadialKernel out;
    out.P = (Ep * a3(kp) - Es * a3(ks)) / (den * std::pow(r, 5));
    out.Q = -Es / (k4Pi * nd.mu * r) + (Ep * a1(kp) - Es * a1(ks)) / (den * r * r * r);
    out.dP = (Ep * a15(kp) - Es * a15(ks)) / (den * std::pow(r, 6));
    out.dQ = -Es * a1(ks) / (k4Pi * nd.mu * r * r) + out.P * r;
    return out;
}

RadialKernel radial_series(double r, cplx k, const NondimMedium& nd) {
    // a_m = -r^2 [c_p^-2 (ikr/c_p)^(m-2) - c_s^-2 (ikr/c_s)^(m-2)] / m!
    const cplx up = kI * k * r / nd.c_p, us = kI * k * r / nd.c_s;
    cplx xp = 1.0 / (nd.c_p * nd.c_p), xs = 1.0 / (nd.c_s * nd.c_s);
    double fact = 2.0;
    cplx sP = 0.0, sQ = 0.0, sdP = 0.0;
    for (int m = 2; m < 80; ++m) {
        const cplx a = -(xp - xs) / fact;
        const double mm = m;
        const cplx tP = a * (mm - 1.0) * (mm - 3.0);
        sP += tP;
        sQ += a * (mm - 1.0);
        sdP += tP * (mm - 5.0);
        if (m > 4 && std::abs(a) < 1e-18 * (std::abs(sQ) + std::abs(sP))) break;
        xp *= up;
        xs *= us;
        fact *= (m + 1);
    }
    const cplx ks = k / nd.c_s;
    const cplx Es = std::exp(kI * ks * r);
    RadialKernel out;
    // The r^2 in a_m cancels two powers of r in each radial factor.
    out.P = sP / (k4Pi * r * r * r);
    out.Q = -Es / (k4Pi * nd.mu * r) + sQ / (k4Pi * r);
    out.dP = sdP / (k4Pi * std::pow(r, 4));
    out.dQ = -Es * (kI * ks * r - 1.0) / (k4Pi * nd.mu * r * r) + out.P * r;
    return out;
}

void require_nonzero(const Vec3& x) {
    if (x[0] == 0.0 && x[1] == 0.0 && x[2] == 0.0)
        throw std::domain_error("Kupradze matrix is singular at zero separation");
}

}  // namespace

RadialKernel kupradze_radial(double r, cplx k, const NondimMedium& nd) {
    if (!(r > 0.0)) throw std::domain_error("Kupradze matrix is singular at zero separation");
    if (std::abs(k) * r / nd.c_s < kSeriesSwitch) return radial_series(r, k, nd);
    return radial_closed(r, k, nd);
}

CMat3 kupradze(const Vec3& x, cplx k, const NondimMedium& nd) {
    require_nonzero(x);
    const RadialKernel rk = kupradze_radial(norm3(x), k, nd);
    CMat3 G{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) G[i][j] = rk.P * x[i] * x[j] + (i == j ? rk.Q : cplx(0.0));
    return G;
}

CMat3 kelvin(const Vec3& x, const NondimMedium& nd) {
    require_nonzero(x);
    const double r = norm3(x);
    const double k1 = 0.5 * (1.0 / nd.mu + 1.0 / (nd.c_p * nd.c_p));
    const double k2 = 0.5 * (1.0 / nd.mu - 1.0 / (nd.c_p * nd.c_p));
    CMat3 G{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            G[i][j] = -k2 * x[i] * x[j] / (k4Pi * r * r * r) - (i == j ? k1 / (k4Pi * r) : 0.0);
    return G;
}

CMat3 kupradze_grad(int ell, const Vec3& x, cplx k, const NondimMedium& nd) {
    if (ell < 0 || ell > 2) throw std::out_of_range("gradient axis must be 0, 1 or 2");
    require_nonzero(x);
    const double r = norm3(x);
    const RadialKernel rk = kupradze_radial(r, k, nd);
    const double xl = x[ell] / r;
    CMat3 D{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx v = rk.dP * xl * x[i] * x[j];
            if (i == ell) v += rk.P * x[j];
            if (j == ell) v += rk.P * x[i];
            if (i == j) v += rk.dQ * xl;
            D[i][j] = v;
        }
    return D;
}

std::array<CMat3, 3> kupradze_grad_all(const Vec3& x, cplx k, const NondimMedium& nd) {
    return {kupradze_grad(0, x, k, nd), kupradze_grad(1, x, k, nd), kupradze_grad(2, x, k, nd)};
}

cplx kupradze_divergence(const Vec3& x, cplx k, const NondimMedium& nd, const Vec3& p) {
    require_nonzero(x);
    const double r = norm3(x);
    const RadialKernel rk = kupradze_radial(r, k, nd);
    // sum_i d_i Gamma_ij = (P' r + 4 P + Q' / r) x_j
    return (rk.dP * r + 4.0 * rk.P + rk.dQ / r) * dot3(x, p);
}

}  // namespace minnaert

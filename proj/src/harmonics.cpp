#include "minnaert/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minnaert {

namespace {

void require_mode(int n, int m) {
    if (n < 0 || n > kMaxHarmonicOrder) throw std::out_of_range("harmonic order outside [0, 8]");
    if (std::abs(m) > n) throw std::out_of_range("harmonic index |m| exceeds the order");
}

// Normalized associated Legendre part without the Condon-Shortley phase.
double legendre_part(int l, int m, double theta) {
    if (m < 0 || m > l) return 0.0;
    const double v = std::sph_legendre(l, m, theta);
    return (m % 2 == 0) ? v : -v;
}

double dtheta_legendre_part(int l, int m, double theta) {
    if (m == 0) return -std::sqrt(double(l) * (l + 1)) * legendre_part(l, 1, theta);
    const double a = std::sqrt(double(l + m) * (l - m + 1));
    const double b = std::sqrt(double(l - m) * (l + m + 1));
    return 0.5 * (a * legendre_part(l, m - 1, theta) - b * legendre_part(l, m + 1, theta));
}

struct Angles {
    double theta, phi;
};

Angles angles_of(const Vec3& u) {
    const double r = norm3(u);
    if (!(r > 0.0)) throw std::domain_error("harmonics need a nonzero direction");
    return {std::acos(std::clamp(u[2] / r, -1.0, 1.0)), std::atan2(u[1], u[0])};
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 unit_of(const Vec3& u) {
    const double r = norm3(u);
    return {u[0] / r, u[1] / r, u[2] / r};
}

}  // namespace

double real_harmonic(int n, int m, const Vec3& unit) {
    require_mode(n, m);
    const Angles a = angles_of(unit);
    const double q = legendre_part(n, std::abs(m), a.theta);
    if (m == 0) return q;
    if (m > 0) return std::sqrt(2.0) * q * std::cos(m * a.phi);
    return std::sqrt(2.0) * q * std::sin(-m * a.phi);
}

Vec3 surface_gradient(int n, int m, const Vec3& unit) {
    require_mode(n, m);
    Angles a = angles_of(unit);
    // At the poles the spherical frame degenerates; the gradient is continuous there,
    // so it is evaluated at a neighbouring colatitude along the same meridian.
    const double pole_guard = 1e-9;
    if (std::sin(a.theta) < pole_guard) a.theta = (a.theta < 1.0) ? pole_guard : kPi - pole_guard;
    const int am = std::abs(m);
    const double st = std::sin(a.theta), ct = std::cos(a.theta);
    const double sp = std::sin(a.phi), cp = std::cos(a.phi);
    double angular = 1.0, dangular = 0.0;
    if (m > 0) {
        angular = std::sqrt(2.0) * std::cos(am * a.phi);
        dangular = -std::sqrt(2.0) * am * std::sin(am * a.phi);
    } else if (m < 0) {
        angular = std::sqrt(2.0) * std::sin(am * a.phi);
        dangular = std::sqrt(2.0) * am * std::cos(am * a.phi);
    }
    const double dth = dtheta_legendre_part(n, am, a.theta) * angular;
    const double dph = legendre_part(n, am, a.theta) * dangular / st;
    const Vec3 e_theta{ct * cp, ct * sp, -st};
    const Vec3 e_phi{-sp, cp, 0.0};
    return {dth * e_theta[0] + dph * e_phi[0], dth * e_theta[1] + dph * e_phi[1], dth * e_theta[2] + dph * e_phi[2]};
}

Vec3 vector_harmonic(VectorFamily family, int n, int m, const Vec3& unit) {
    const Vec3 nu = unit_of(unit);
    switch (family) {
        case VectorFamily::I: {
            const Vec3 g = surface_gradient(n + 1, m, nu);
            const double y = (n + 1) * real_harmonic(n + 1, m, nu);
            return {g[0] + y * nu[0], g[1] + y * nu[1], g[2] + y * nu[2]};
        }
        case VectorFamily::T:
            return cross3(surface_gradient(n + 1, m, nu), nu);
        case VectorFamily::N: {
            if (n < 1) throw std::out_of_range("N family needs n >= 1");
            const Vec3 g = surface_gradient(n - 1, m, nu);
            const double y = n * real_harmonic(n - 1, m, nu);
            return {-g[0] + y * nu[0], -g[1] + y * nu[1], -g[2] + y * nu[2]};
        }
    }
    throw std::invalid_argument("unknown vector harmonic family");
}

std::vector<Mode> modes_up_to(int n_max) {
    if (n_max < 0 || n_max > kMaxHarmonicOrder) throw std::out_of_range("modal truncation outside [0, 8]");
    std::vector<Mode> out;
    for (int n = 0; n <= n_max; ++n)
        for (int m = -n; m <= n; ++m) out.push_back({n, m});
    return out;
}

}  // namespace minnaert

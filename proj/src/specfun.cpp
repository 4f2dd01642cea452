#include "minnaert/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minnaert {

namespace {

constexpr double kSeriesTol = 1e-18;

int series_cap(int n) { return std::max(60, 2 * n + 20); }

void require_order(int n) {
    if (n < 0) throw std::domain_error("spherical Bessel order must be non-negative");
}

// z^n / (2n+1)!! built as a product so that neither factor overflows on its own.
cplx leading_j(int n, cplx z) {
    cplx t = 1.0;
    for (int q = 1; q <= n; ++q) t *= z / double(2 * q + 1);
    return t;
}

cplx series_j(int n, cplx z) {
    const cplx z2 = z * z;
    cplx term = leading_j(n, z);
    cplx sum = term;
    for (int p = 0; p < series_cap(n); ++p) {
        term *= -z2 / (2.0 * (p + 1) * (2.0 * n + 2.0 * p + 3.0));
        sum += term;
        if (std::abs(term) < kSeriesTol * std::abs(sum)) break;
    }
    return sum;
}

cplx series_y(int n, cplx z) {
    const cplx z2 = z * z;
    // -(2n-1)!! / z^{n+1}, accumulated as a product.
    cplx term = -1.0 / z;
    for (int q = 1; q <= n; ++q) term *= double(2 * q - 1) / z;
    cplx sum = term;
    for (int p = 0; p < series_cap(n); ++p) {
        term *= -z2 / (2.0 * (p + 1) * (-2.0 * n + 2.0 * p + 1.0));
        sum += term;
        if (std::abs(term) < kSeriesTol * std::abs(sum)) break;
    }
    return sum;
}

cplx closed_j0(cplx z) { return std::sin(z) / z; }
cplx closed_j1(cplx z) { return std::sin(z) / (z * z) - std::cos(z) / z; }

cplx miller_j(int n, cplx z) {
    const int start = n + static_cast<int>(std::abs(z)) + 40;
    cplx f_next = 0.0;
    cplx f_cur = 1e-30;
    cplx f_n = (start == n) ? f_cur : cplx(0.0);
    for (int k = start; k >= 1; --k) {
        cplx f_prev = double(2 * k + 1) / z * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        if (std::abs(f_cur) > 1e250) {
            f_cur *= 1e-250;
            f_next *= 1e-250;
            f_n *= 1e-250;
        }
        if (k - 1 == n) f_n = f_cur;
    }
    const cplx f0 = f_cur;
    const cplx f1 = f_next;
    const cplx j0 = closed_j0(z);
    const cplx j1 = closed_j1(z);
    // Normalise against whichever low order is further from a zero.
    if (std::abs(j0) * std::abs(f1) >= std::abs(j1) * std::abs(f0)) return f_n * (j0 / f0);
    return f_n * (j1 / f1);
}

cplx closed_h0(cplx z) { return -kI * std::exp(kI * z) / z; }
cplx closed_h1(cplx z) { return -std::exp(kI * z) * (z + kI) / (z * z); }

cplx upward_h(int n, cplx z) {
    cplx hm = closed_h0(z);
    if (n == 0) return hm;
    cplx h = closed_h1(z);
    for (int k = 1; k < n; ++k) {
        cplx hp = double(2 * k + 1) / z * h - hm;
        hm = h;
        h = hp;
    }
    return h;
}

}  // namespace

double series_switch_radius(int n) { return std::max(1.0, 0.5 * n); }

cplx sph_bessel_j(int n, cplx z) {
    require_order(n);
    if (z == cplx(0.0)) return n == 0 ? 1.0 : 0.0;
    if (std::abs(z) < series_switch_radius(n)) return series_j(n, z);
    if (n == 0) return closed_j0(z);
    if (n == 1) return closed_j1(z);
    return miller_j(n, z);
}

cplx sph_hankel_h1(int n, cplx z) {
    require_order(n);
    if (z == cplx(0.0)) throw std::domain_error("spherical Hankel function has a pole at z = 0");
    if (std::abs(z) < series_switch_radius(n)) return series_j(n, z) + kI * series_y(n, z);
    return upward_h(n, z);
}

cplx sph_bessel_y(int n, cplx z) {
    require_order(n);
    if (z == cplx(0.0)) throw std::domain_error("spherical Neumann function has a pole at z = 0");
    if (std::abs(z) < series_switch_radius(n)) return series_y(n, z);
    return (sph_hankel_h1(n, z) - sph_bessel_j(n, z)) / kI;
}

cplx sph_bessel_dj(int n, cplx z) {
    require_order(n);
    if (z == cplx(0.0)) return n == 1 ? 1.0 / 3.0 : 0.0;
    if (n == 0) return -sph_bessel_j(1, z);
    return sph_bessel_j(n - 1, z) - double(n + 1) / z * sph_bessel_j(n, z);
}

cplx sph_hankel_dh1(int n, cplx z) {
    require_order(n);
    if (z == cplx(0.0)) throw std::domain_error("spherical Hankel derivative has a pole at z = 0");
    if (n == 0) return -sph_hankel_h1(1, z);
    return sph_hankel_h1(n - 1, z) - double(n + 1) / z * sph_hankel_h1(n, z);
}

std::int64_t double_factorial(int m) {
    if (m < -1 || m % 2 == 0) throw std::domain_error("double_factorial expects an odd integer >= -1");
    std::int64_t r = 1;
    for (int q = 3; q <= m; q += 2) r *= q;
    return r;
}

}  // namespace minnaert

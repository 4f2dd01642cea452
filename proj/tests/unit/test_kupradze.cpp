#include <gtest/gtest.h>

#include "minnaert/kupradze.hpp"
#include "minnaert/medium.hpp"

using namespace minnaert;

namespace {
const NondimMedium kMedium = nondimensionalize(PhysicalMedium{});

double mat_diff(const CMat3& a, const CMat3& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}
double mat_norm(const CMat3& a) {
    double d = 0.0;
    for (const auto& row : a)
        for (cplx v : row) d = std::max(d, std::abs(v));
    return d;
}
}  // namespace

TEST(Kupradze, IsSymmetric) {
    const CMat3 g = kupradze({0.3, -0.2, 0.5}, cplx(0.8, 0.1), kMedium);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(g[i][j] - g[j][i]), 1e-15 * mat_norm(g));
}

TEST(Kupradze, ReducesToKelvinAtZeroWavenumber) {
    const Vec3 x{0.4, 0.1, -0.3};
    EXPECT_LT(mat_diff(kupradze(x, 0.0, kMedium), kelvin(x, kMedium)), 1e-14 * mat_norm(kelvin(x, kMedium)));
    EXPECT_LT(mat_diff(kupradze(x, 1e-7, kMedium), kelvin(x, kMedium)), 1e-6 * mat_norm(kelvin(x, kMedium)));
}

TEST(Kupradze, SeriesAndClosedFormAgreeAtTheSwitch) {
    const Vec3 x{1.0, 0.0, 0.0};
    const double k_switch = 0.5 * kMedium.c_s;
    const CMat3 a = kupradze(x, k_switch * (1 - 1e-14), kMedium);
    const CMat3 b = kupradze(x, k_switch * (1 + 1e-14), kMedium);
    EXPECT_LT(mat_diff(a, b), 1e-13 * mat_norm(b));
}

TEST(Kupradze, SatisfiesNavierEquationAwayFromOrigin) {
    // mu Lap G + (lambda + mu) grad div G + k^2 G = 0, checked by finite differences.
    const Vec3 x{0.7, -0.4, 0.5};
    const cplx k(1.1, 0.05);
    const double h = 1e-3;
    for (int col = 0; col < 3; ++col) {
        CVec3 res{};
        for (int i = 0; i < 3; ++i) res[i] = k * k * kupradze(x, k, kMedium)[i][col];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                auto shifted = [&](double sa, double sb) {
                    Vec3 y = x;
                    y[a] += sa;
                    y[b] += sb;
                    return kupradze(y, k, kMedium);
                };
                const CMat3 pp = shifted(h, h), pm = shifted(h, -h), mp = shifted(-h, h), mm = shifted(-h, -h);
                for (int i = 0; i < 3; ++i) {
                    const cplx dab_i = (pp[i][col] - pm[i][col] - mp[i][col] + mm[i][col]) / (4 * h * h);
                    if (a == b) res[i] += kMedium.mu * dab_i;
                    const cplx dab_b = (pp[b][col] - pm[b][col] - mp[b][col] + mm[b][col]) / (4 * h * h);
                    if (i == a) res[i] += (kMedium.lambda + kMedium.mu) * dab_b;
                }
            }
        double scale = 0.0;
        for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(kupradze(x, k, kMedium)[i][col]));
        for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(res[i]), 1e-4 * scale * std::abs(k * k)) << col << i;
    }
}

TEST(Kupradze, GradientMatchesFiniteDifferences) {
    const Vec3 x{0.6, 0.2, -0.45};
    for (cplx k : {cplx(0.0), cplx(0.1), cplx(2.0, 0.3)}) {
        const auto grads = kupradze_grad_all(x, k, kMedium);
        for (int l = 0; l < 3; ++l) {
            const double h = 1e-5;
            Vec3 xp = x, xm = x;
            xp[l] += h;
            xm[l] -= h;
            const CMat3 gp = kupradze(xp, k, kMedium), gm = kupradze(xm, k, kMedium);
            CMat3 fd;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) fd[i][j] = (gp[i][j] - gm[i][j]) / (2 * h);
            EXPECT_LT(mat_diff(grads[l], fd), 1e-7 * mat_norm(fd)) << l << " " << k;
            EXPECT_LT(mat_diff(grads[l], kupradze_grad(l, x, k, kMedium)), 1e-15 * mat_norm(fd));
        }
    }
}

TEST(Kupradze, DivergenceContractsTheGradient) {
    const Vec3 x{0.3, 0.3, 0.9};
    const Vec3 p{0.2, -1.0, 0.5};
    const cplx k(0.6, 0.0);
    const auto g = kupradze_grad_all(x, k, kMedium);
    cplx expected = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) expected += g[i][i][j] * p[j];
    EXPECT_LT(std::abs(kupradze_divergence(x, k, kMedium, p) - expected), 1e-14 * std::abs(expected));
}

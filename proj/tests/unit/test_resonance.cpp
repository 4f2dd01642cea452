#include <gtest/gtest.h>

#include <random>

#include "minnaert/medium.hpp"
#include "minnaert/resonance.hpp"

using namespace minnaert;

namespace {
const NondimMedium kMedium = nondimensionalize(PhysicalMedium{});
}

TEST(Resonance, ClosedFormImaginaryPart) {
    const double expected = -4 * kMedium.mu * kMedium.gamma / (4 * kMedium.mu + 3 * kMedium.delta * kMedium.tau * kMedium.tau);
    EXPECT_DOUBLE_EQ(omega0_imag(kMedium), expected);
    EXPECT_NEAR(resonance_radius(kMedium), std::abs(expected) + 1.0, 1e-15);
}

TEST(Resonance, NewtonAgreesWithClosedFormOnRandomMedia) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mu(0.02, 0.2), tau(0.5, 6.0), gamma(0.1, 5.0), logd(-5.0, -2.0);
    for (int i = 0; i < 10; ++i) {
        const NondimMedium nd = make_nondim(std::pow(10.0, logd(rng)), tau(rng), mu(rng), gamma(rng));
        const auto res = solve_first_order_resonance(nd, 1e-2);
        ASSERT_EQ(res.size(), 2u);
        EXPECT_TRUE(res[0].removable);
        EXPECT_EQ(res[0].omega, cplx(0.0));
        EXPECT_LT(std::abs(res[1].omega - cplx(0.0, omega0_imag(nd))), 1e-10 * std::abs(omega0_imag(nd)));
        EXPECT_LT(res[1].residual, 1e-12);
    }
}

TEST(Resonance, StaticSymbolVanishesOnlyForOrderZero) {
    EXPECT_NEAR(lambda_expansion(0, 1.0, kMedium).lambda_static, 0.0, 1e-15);
    for (int n = 1; n <= 6; ++n) EXPECT_GT(lambda_expansion(n, 1.0, kMedium).lambda_static, 0.0) << n;
}

TEST(Resonance, DirectAndComposedSymbolsAgree) {
    const cplx c = c_of_omega(kMedium, cplx(1.0, -0.3));
    for (int n = 0; n <= 4; ++n)
        for (cplx k : {cplx(0.05), cplx(0.3), cplx(0.2, -0.05)}) {
            const cplx a = lambda_at(n, k, c, kMedium), b = lambda_composed(n, k, c, kMedium);
            EXPECT_LT(std::abs(a - b), 1e-11 * std::max(1.0, std::abs(b))) << n << " " << k;
        }
}

TEST(Resonance, ReducedOrderZeroSymbol) {
    const cplx c = c_of_omega(kMedium, 0.7);
    const cplx k = 0.01;
    EXPECT_LT(std::abs(lambda0_over_k2(k, c, kMedium) * k * k - lambda_at(0, k, c, kMedium)),
              1e-10 * std::abs(lambda_at(0, k, c, kMedium)));
}

TEST(Resonance, TruncatedSymbolHasOneZeroNearTheResonance) {
    const double eps = 1e-2;
    const cplx centre(0.0, omega0_imag(kMedium));
    auto f = [&](cplx w) { return truncated_symbol0(w, kMedium, eps); };
    EXPECT_EQ(winding_number(f, centre, 0.2), 1);
    EXPECT_LT(std::abs(f(centre)), 1e-12);
}

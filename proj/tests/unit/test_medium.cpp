#include <gtest/gtest.h>

#include <random>

#include "minnaert/medium.hpp"

using namespace minnaert;

TEST(Medium, WaveSpeedsSumToOne) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.5, 5.0);
    for (int i = 0; i < 50; ++i) {
        PhysicalMedium m;
        m.lambda_tilde = u(rng) * 1e6;
        m.mu_tilde = u(rng) * 1e6;
        m.rho_e = u(rng) * 1e3;
        const NondimMedium nd = nondimensionalize(m);
        EXPECT_NEAR(nd.c_s + nd.c_p, 1.0, 1e-14);
        EXPECT_NEAR(nd.c_s * nd.c_s, nd.mu, 1e-14);
        EXPECT_NEAR(nd.c_p * nd.c_p, nd.lambda + 2 * nd.mu, 1e-14);
    }
}

TEST(Medium, DefaultNondimensionalValues) {
    const NondimMedium nd = nondimensionalize(PhysicalMedium{});
    EXPECT_NEAR(nd.delta, 1e-3, 1e-15);
    EXPECT_NEAR(nd.mu, 1.0 / 9.0, 1e-14);
    EXPECT_NEAR(nd.lambda, 2.0 / 9.0, 1e-14);
    EXPECT_NEAR(nd.c_b, std::sqrt(1.4e5 / 1.2), 1e-10);
}

TEST(Medium, RejectsInadmissibleInput) {
    PhysicalMedium m;
    m.mu_tilde = -1.0;
    EXPECT_THROW(validate(m), std::invalid_argument);
    m = PhysicalMedium{};
    m.rho_b = 0.0;
    EXPECT_THROW(validate(m), std::invalid_argument);
    m = PhysicalMedium{};
    m.gamma = -0.1;
    EXPECT_THROW(validate(m), std::invalid_argument);
}

TEST(Medium, LambdaFromMuSatisfiesSpeedSum) {
    for (double mu : {0.01, 0.1, 0.2}) {
        const double l = lambda_from_mu(mu);
        EXPECT_NEAR(std::sqrt(mu) + std::sqrt(l + 2 * mu), 1.0, 1e-14);
    }
}

TEST(Medium, K1SquaredRegularAtZeroAndMatchesFrequencyState) {
    const NondimMedium nd = nondimensionalize(PhysicalMedium{});
    EXPECT_EQ(k1_squared(nd, 0.0, 1e-2), cplx(0.0));
    const cplx w(1.3, -0.2);
    const FrequencyState fs = frequency_state(nd, w, 1e-2);
    EXPECT_LT(std::abs(fs.k1 * fs.k1 - k1_squared(nd, w, 1e-2)), 1e-14 * std::abs(fs.k1 * fs.k1));
    EXPECT_GE(sqrt_c(cplx(-4.0, -1e-30)).real(), 0.0);
}

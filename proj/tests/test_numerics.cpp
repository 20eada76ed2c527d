#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace shannon;

TEST(PairwiseSum, MatchesExactSumOfRepresentableTerms) {
    std::vector<double> xs(1000, 0.125);
    EXPECT_EQ(pairwise_sum(xs), 125.0);
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(PairwiseSum, BeatsNaiveSummation) {
    std::vector<double> xs(1 << 20, 0.1);
    double naive = 0.0;
    for (double x : xs) naive += x;
    const double exact = 0.1 * static_cast<double>(xs.size());
    EXPECT_LT(std::abs(pairwise_sum(xs) - exact), std::abs(naive - exact));
}

TEST(Xlogx, ZeroConvention) {
    EXPECT_EQ(xlogx(0.0), 0.0);
    EXPECT_EQ(xlogx(1.0), 0.0);
    EXPECT_NEAR(xlogx(0.5), -0.5 * std::numbers::ln2, 1e-16);
}

TEST(Integrate, PolynomialsAreExact) {
    const auto r = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0);
    EXPECT_NEAR(r.value, 20.0 - 8.0, 1e-13);
    EXPECT_GE(r.l1_norm, std::abs(r.value));
}

TEST(Integrate, SmoothTranscendental) {
    EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0).value,
                std::sqrt(std::numbers::pi), 1e-12);
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value, 2.0,
                1e-12);
}

TEST(Integrate, ReversedLimits) {
    EXPECT_NEAR(integrate([](double) { return 1.0; }, 2.0, 0.0).value, -2.0, 1e-15);
    EXPECT_EQ(integrate([](double) { return 1.0; }, 1.0, 1.0).value, 0.0);
}

TEST(Integrate, KinkIsResolvedAdaptively) {
    const auto r = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0);
    EXPECT_NEAR(r.value, 0.5 * (0.09 + 0.49), 1e-10);
    EXPECT_LE(r.error_estimate, 1e-10);
}

TEST(Integrate, FailureModes) {
    auto kind = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const DomainError& e) {
            return e.kind();
        }
        return std::string("none");
    };
    EXPECT_EQ(kind([] { integrate([](double x) { return 1.0 / x; }, 0.0, 1.0); }),
              "QuadratureFailure");
    EXPECT_EQ(kind([] {
                  integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, {1e-14, 6});
              }),
              "QuadratureFailure");
    EXPECT_EQ(kind([] { integrate([](double) { return 1.0; }, 0.0, INFINITY); }),
              "QuadratureFailure");
}

#include "shannon/corpus.hpp"
#include "shannon/discrete.hpp"
#include "shannon/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace shannon;

namespace {

DiscreteDistribution dist(std::vector<double> p) { return validate_distribution(std::move(p)); }

// Term-by-term reference, kept separate from the library's pairwise path.
double naive_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

}  // namespace

TEST(ShannonEntropy, Examples) {
    EXPECT_NEAR(shannon_entropy(dist({0.5, 0.5})).value, std::numbers::ln2, 1e-15);
    EXPECT_EQ(shannon_entropy(dist({1.0, 0.0, 0.0})).value, 0.0);
    // ln 3 - (2/3) ln 2
    EXPECT_NEAR(shannon_entropy(dist({1.0 / 3, 2.0 / 3})).value, 0.636514168294812818, 1e-15);
}

TEST(ShannonEntropy, UnitsFollowK) {
    const auto p = dist({0.1, 0.2, 0.7});
    const double nats = shannon_entropy(p).value;
    EXPECT_EQ(shannon_entropy(dist({0.5, 0.5}), EntropyScale::bits()).value, 1.0);
    EXPECT_NEAR(shannon_entropy(p, EntropyScale::bits()).value, nats / std::numbers::ln2,
                1e-12 * nats);
    EXPECT_EQ(shannon_entropy(p, EntropyScale::custom(2.0)).value, 2.0 * nats);
    EXPECT_THROW(EntropyScale::custom(0.0), DomainError);
    EXPECT_THROW(EntropyScale::custom(-1.0), DomainError);
}

TEST(PhiEntropy, Examples) {
    EXPECT_NEAR(phi_entropy(dist({0.5, 0.5}), PhiFunction::shannon()), std::numbers::ln2, 1e-15);
    const PhiFunction gini("gini", [](double p) { return p * (1.0 - p); }, 0.0);
    EXPECT_DOUBLE_EQ(phi_entropy(dist({0.5, 0.5}), gini), 0.5);
    EXPECT_EQ(phi_entropy(dist({1.0, 0.0}), PhiFunction::shannon()), 0.0);
}

TEST(PhiEntropy, NonFinitePhiIsAnError) {
    const PhiFunction bad("log", [](double p) { return std::log(p - 0.5); }, 0.0);
    try {
        phi_entropy(dist({0.25, 0.75}), bad);
        FAIL() << "expected PhiUndefined";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.kind(), "PhiUndefined");
    }
}

TEST(PhiFunction, ConcavityProbe) {
    EXPECT_LE(concavity_violation(PhiFunction::shannon(), 5000, 1), 1e-12);
    const PhiFunction convex("square", [](double p) { return p * p; }, 0.0);
    EXPECT_GT(concavity_violation(convex, 5000, 1), 1e-3);
}

TEST(TotalEntropy, Examples) {
    const auto p = dist({0.5, 0.5});
    EXPECT_NEAR(total_entropy(BinnedVariable({0, 1}, p, {1, 1})).value, std::numbers::ln2, 1e-15);
    EXPECT_NEAR(total_entropy(BinnedVariable({0, 1}, p, {2, 2})).value, std::log(4.0), 1e-15);
    EXPECT_NEAR(total_entropy(BinnedVariable({0, 1}, dist({1.0, 0.0}), {std::numbers::e, 1}))
                    .value,
                1.0, 1e-15);
}

TEST(TotalEntropy, CanBeNegative) {
    const auto v = BinnedVariable({0, 1}, dist({0.5, 0.5}), {0.01, 0.01});
    EXPECT_LT(total_entropy(v).value, 0.0);
}

TEST(TotalEntropy, UniformWidthShiftIdentity) {
    auto rng = substream(3, 0);
    std::uniform_real_distribution<double> width(0.01, 10.0);
    for (int t = 0; t < 500; ++t) {
        const auto p = random_distribution(rng, 1 + static_cast<std::size_t>(t % 50), 0.2);
        const double h = width(rng);
        std::vector<double> values(p.size());
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>(i) * h;
        const BinnedVariable v(values, p, std::vector<double>(p.size(), h));
        EXPECT_NEAR(total_entropy(v).value, shannon_entropy(p).value + std::log(h), 1e-12);
    }
}

TEST(Additivity, Examples) {
    const auto p = dist({0.5, 0.5});
    const auto q = dist({1.0 / 3, 2.0 / 3});
    EXPECT_LE(additivity_defect(p, q), 1e-12);
    EXPECT_NEAR(shannon_entropy(p).value + shannon_entropy(q).value, 1.329661348854758128, 1e-14);
    EXPECT_EQ(additivity_defect(dist({1.0}), dist({0.1, 0.2, 0.7})), 0.0);
    EXPECT_LE(additivity_defect(dist({0.25, 0.75}), dist({0.25, 0.75})), 1e-12);
}

TEST(Schur, Examples) {
    auto r = schur_concavity_check(dist({1.0, 0.0}), dist({0.5, 0.5}));
    EXPECT_TRUE(r.majorizes);
    EXPECT_TRUE(r.entropy_ordered);
    EXPECT_EQ(r.entropy_p, 0.0);
    EXPECT_NEAR(r.entropy_q, std::numbers::ln2, 1e-15);

    r = schur_concavity_check(dist({0.5, 0.5}), dist({0.5, 0.5}));
    EXPECT_TRUE(r.majorizes);
    EXPECT_TRUE(r.entropy_ordered);

    // partial sums 0.7, 0.9, 1.0 vs 0.5, 0.8, 1.0
    r = schur_concavity_check(dist({0.7, 0.2, 0.1}), dist({0.5, 0.3, 0.2}));
    EXPECT_TRUE(r.majorizes);
    EXPECT_FALSE(r.reverse_majorizes);
    EXPECT_TRUE(r.entropy_ordered);
    EXPECT_NEAR(r.entropy_p, naive_entropy(std::vector<double>{0.7, 0.2, 0.1}), 1e-15);
}

TEST(Schur, IncomparablePairIsReportedNotThrown) {
    // partial sums 0.5, 0.75, 1.0 vs 0.4, 0.8, 1.0
    const auto r = schur_concavity_check(dist({0.5, 0.25, 0.25}), dist({0.4, 0.4, 0.2}));
    EXPECT_TRUE(r.incomparable);
    EXPECT_FALSE(r.majorizes);
    EXPECT_FALSE(r.entropy_ordered);
}

TEST(Schur, LengthMismatch) {
    EXPECT_THROW(schur_concavity_check(dist({1.0}), dist({0.5, 0.5})), DomainError);
}

TEST(Schur, RobinHoodPairsAreMajorizedAndOrdered) {
    auto rng = substream(99, 0);
    for (int t = 0; t < 500; ++t) {
        const auto p = random_distribution(rng, 2 + static_cast<std::size_t>(t % 30));
        const auto q = robin_hood(p, rng, 1 + t % 10);
        const auto r = schur_concavity_check(p, q);
        ASSERT_TRUE(r.majorizes) << "trial " << t;
        ASSERT_TRUE(r.entropy_ordered) << "trial " << t;
    }
}

TEST(EntropyProperties, RandomCorpus) {
    auto rng = substream(2024, 0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 64);
        const auto p = random_distribution(rng, n, 0.2);
        const auto q = random_distribution(rng, n);
        const double hp = shannon_entropy(p).value;
        EXPECT_GE(hp, 0.0);
        EXPECT_LE(hp, std::log(static_cast<double>(n)) + 1e-12);
        EXPECT_NEAR(hp, naive_entropy(p.probs()), 1e-12);

        const double l = unit(rng);
        std::vector<double> mix(n);
        for (std::size_t i = 0; i < n; ++i) mix[i] = l * p[i] + (1 - l) * q[i];
        EXPECT_GE(shannon_entropy(dist(mix)).value,
                  l * hp + (1 - l) * shannon_entropy(q).value - 1e-10);
        EXPECT_LE(additivity_defect(p, q), 1e-10);
    }
}

TEST(EntropyProperties, MaximumOnlyAtUniform) {
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto u = dist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
        EXPECT_NEAR(shannon_entropy(u).value, std::log(static_cast<double>(n)), 1e-12);
    }
    const auto nearly = dist({0.5 + 1e-3, 0.5 - 1e-3});
    EXPECT_LT(shannon_entropy(nearly).value, std::numbers::ln2 - 1e-12);
}

TEST(AxiomSuite, SmallRunPasses) {
    AxiomSuiteConfig config;
    config.distributions = 500;
    config.product_pairs = 100;
    config.concavity_trials = 100;
    config.schur_pairs = 100;
    const auto r = run_axiom_suite(config);
    EXPECT_TRUE(r.all_ok());
    EXPECT_EQ(r.distributions_checked, 500);
    EXPECT_EQ(r.schur_pairs_checked, 100);
}

#pragma once

#include "shannon/distributions.hpp"
#include "shannon/units.hpp"

#include <cstdint>
#include <random>

namespace shannon {

/// Independent generator for shard `shard` of a run seeded with `seed`.
/// Results are reproducible at any level of parallelism.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t shard);

/// Uniformly distributed point on the simplex of dimension n (flat Dirichlet).
/// With probability `zero_chance` each coordinate is forced to zero (at least
/// one stays positive).
DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t n,
                                         double zero_chance = 0.0);

/// Applies `transfers` Robin Hood moves to p: each moves mass from a larger
/// coordinate to a smaller one without reversing their order. The result is
/// majorized by p.
DiscreteDistribution robin_hood(const DiscreteDistribution& p, std::mt19937_64& rng,
                                int transfers);

struct AxiomSuiteConfig {
    std::uint64_t seed = 42;
    int distributions = 10000;
    int product_pairs = 1000;
    int concavity_trials = 1000;
    int schur_pairs = 1000;
    std::size_t max_n = 64;
    EntropyScale scale = EntropyScale::nats();
};

struct AxiomSuiteReport {
    int distributions_checked = 0;
    int negative_entropies = 0;
    double min_entropy = 0.0;
    // max over samples of H - k ln n (must stay <= 1e-12)
    double max_excess_over_log_n = 0.0;
    // largest |H - k ln n| over exact uniform distributions
    double max_uniform_gap = 0.0;
    // non-uniform samples whose entropy came within 1e-12 of k ln n
    int non_uniform_at_maximum = 0;
    double max_additivity_defect = 0.0;
    // min over trials of H(mix) - mixed entropies (must stay >= -1e-10)
    double min_concavity_slack = 0.0;
    int schur_pairs_checked = 0;
    int schur_failures = 0;

    bool nonnegativity_ok() const { return negative_entropies == 0; }
    bool maximum_ok() const {
        return max_excess_over_log_n <= 1e-12 && max_uniform_gap <= 1e-12 &&
               non_uniform_at_maximum == 0;
    }
    bool additivity_ok() const { return max_additivity_defect <= 1e-10; }
    bool concavity_ok() const { return min_concavity_slack >= -1e-10; }
    bool schur_ok() const { return schur_failures == 0; }
    bool all_ok() const {
        return nonnegativity_ok() && maximum_ok() && additivity_ok() && concavity_ok() &&
               schur_ok();
    }
};

/// Seeded randomized check of non-negativity, the k ln n maximum, additivity
/// over independent products, concavity on the simplex and Schur concavity.
AxiomSuiteReport run_axiom_suite(const AxiomSuiteConfig& config);

}  // namespace shannon

#include "shannon/corpus.hpp"

#include "shannon/discrete.hpp"
#include "shannon/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace shannon {

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t shard) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
    return std::mt19937_64(seq);
}

DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t n,
                                         double zero_chance) {
    if (n == 0) throw DomainError("EmptyDistribution", "n must be at least 1");
    std::exponential_distribution<double> gamma1(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(n);
    for (double& x : w) {
        x = gamma1(rng);
        if (zero_chance > 0.0 && unit(rng) < zero_chance) x = 0.0;
    }
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        w[pick(rng)] = 1.0;
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    return DiscreteDistribution(std::move(w));
}

DiscreteDistribution robin_hood(const DiscreteDistribution& p, std::mt19937_64& rng,
                                int transfers) {
    std::vector<double> q(p.probs().begin(), p.probs().end());
    if (q.size() < 2) return DiscreteDistribution(std::move(q), p.tolerance());
    std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < transfers; ++t) {
        std::size_t rich = pick(rng);
        std::size_t poor = pick(rng);
        if (q[rich] < q[poor]) std::swap(rich, poor);
        const double gap = q[rich] - q[poor];
        if (gap <= 0.0) continue;
        // eps <= gap/2 keeps rich >= poor after the move (a T-transform).
        const double eps = 0.5 * gap * unit(rng);
        q[rich] -= eps;
        q[poor] += eps;
    }
    return DiscreteDistribution(std::move(q), p.tolerance());
}

namespace {

std::size_t random_size(std::mt19937_64& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> dist(1, max_n);
    return dist(rng);
}

bool is_uniform(const DiscreteDistribution& p) {
    const auto probs = p.probs();
    return std::all_of(probs.begin(), probs.end(),
                       [&](double x) { return x == probs.front(); });
}

}  // namespace

AxiomSuiteReport run_axiom_suite(const AxiomSuiteConfig& config) {
    if (config.max_n < 1) throw DomainError("InvalidArgument", "max_n must be at least 1");
    const EntropyScale& scale = config.scale;
    AxiomSuiteReport report;
    report.min_entropy = std::numeric_limits<double>::infinity();
    report.max_excess_over_log_n = -std::numeric_limits<double>::infinity();
    report.min_concavity_slack = std::numeric_limits<double>::infinity();

    // Non-negativity and the k ln n bound on random distributions, a share
    // of which carry zero entries.
    {
        auto rng = substream(config.seed, 0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < config.distributions; ++i) {
            const std::size_t n = random_size(rng, config.max_n);
            const double zero_chance = unit(rng) < 0.25 ? 0.3 : 0.0;
            const auto p = random_distribution(rng, n, zero_chance);
            const double h = shannon_entropy(p, scale).value;
            const double bound = scale.apply(std::log(static_cast<double>(n)));
            ++report.distributions_checked;
            if (h < 0.0) ++report.negative_entropies;
            report.min_entropy = std::min(report.min_entropy, h);
            report.max_excess_over_log_n = std::max(report.max_excess_over_log_n, h - bound);
            if (!is_uniform(p) && std::abs(h - bound) <= 1e-12) ++report.non_uniform_at_maximum;
        }
    }

    // Equality case: exact uniform distributions for every n.
    for (std::size_t n = 1; n <= config.max_n; ++n) {
        const auto p = DiscreteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
        const double h = shannon_entropy(p, scale).value;
        const double bound = scale.apply(std::log(static_cast<double>(n)));
        report.max_uniform_gap = std::max(report.max_uniform_gap, std::abs(h - bound));
        report.max_excess_over_log_n = std::max(report.max_excess_over_log_n, h - bound);
    }

    {
        auto rng = substream(config.seed, 1);
        for (int i = 0; i < config.product_pairs; ++i) {
            const auto p = random_distribution(rng, random_size(rng, config.max_n));
            const auto q = random_distribution(rng, random_size(rng, config.max_n));
            report.max_additivity_defect =
                std::max(report.max_additivity_defect, additivity_defect(p, q, scale));
        }
    }

    {
        auto rng = substream(config.seed, 2);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < config.concavity_trials; ++i) {
            const std::size_t n = random_size(rng, config.max_n);
            const auto p = random_distribution(rng, n);
            const auto q = random_distribution(rng, n);
            double l = unit(rng);
            if (l == 0.0) l = 0.5;
            std::vector<double> mix(n);
            for (std::size_t j = 0; j < n; ++j) mix[j] = l * p[j] + (1.0 - l) * q[j];
            const double h_mix = shannon_entropy(DiscreteDistribution(std::move(mix)), scale).value;
            const double chord = l * shannon_entropy(p, scale).value +
                                 (1.0 - l) * shannon_entropy(q, scale).value;
            report.min_concavity_slack = std::min(report.min_concavity_slack, h_mix - chord);
        }
    }

    {
        auto rng = substream(config.seed, 3);
        std::uniform_int_distribution<int> transfers(1, 16);
        for (int i = 0; i < config.schur_pairs; ++i) {
            const std::size_t n = std::max<std::size_t>(2, random_size(rng, config.max_n));
            const auto p = random_distribution(rng, n);
            const auto q = robin_hood(p, rng, transfers(rng));
            const auto r = schur_concavity_check(p, q, scale);
            ++report.schur_pairs_checked;
            if (!r.majorizes || !r.entropy_ordered) ++report.schur_failures;
        }
    }

    if (config.distributions == 0) report.min_entropy = 0.0;
    if (config.concavity_trials == 0) report.min_concavity_slack = 0.0;
    return report;
}

}  // namespace shannon

#include "shannon/discrete.hpp"

#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace shannon {

PhiFunction::PhiFunction(std::string name, std::function<double(double)> evaluator,
                         double value_at_zero)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), value_at_zero_(value_at_zero) {
    if (!evaluator_) throw DomainError("PhiUndefined", "phi evaluator is empty");
}

PhiFunction PhiFunction::shannon() {
    return PhiFunction("shannon", [](double p) { return -xlogx(p); }, 0.0);
}

double PhiFunction::operator()(double p) const {
    return p == 0.0 ? value_at_zero_ : evaluator_(p);
}

double concavity_violation(const PhiFunction& phi, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const double p = unit(rng);
        const double q = unit(rng);
        const double l = unit(rng);
        if (p == 0.0 || q == 0.0 || l == 0.0) continue;
        const double chord = l * phi(p) + (1.0 - l) * phi(q);
        worst = std::max(worst, chord - phi(l * p + (1.0 - l) * q));
    }
    return worst;
}

namespace {

double shannon_nats(std::span<const double> probs) {
    std::vector<double> terms;
    terms.reserve(probs.size());
    for (double p : probs) terms.push_back(-xlogx(p));
    return pairwise_sum(terms);
}

std::vector<double> sorted_descending(std::span<const double> probs) {
    std::vector<double> v(probs.begin(), probs.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

EntropyValue shannon_entropy(const DiscreteDistribution& p, const EntropyScale& scale) {
    return make_entropy(shannon_nats(p.probs()), scale);
}

double phi_entropy(const DiscreteDistribution& p, const PhiFunction& phi) {
    std::vector<double> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double v = phi(p[i]);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "phi '" << phi.name() << "' is not finite at p = " << p[i];
            throw DomainError("PhiUndefined", msg.str());
        }
        terms.push_back(v);
    }
    return pairwise_sum(terms);
}

EntropyValue total_entropy(const BinnedVariable& v, const EntropyScale& scale) {
    const auto probs = v.probs();
    const auto widths = v.widths();
    std::vector<double> terms;
    terms.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        // -p ln(p/h) = -p ln p + p ln h
        terms.push_back(probs[i] == 0.0 ? 0.0 : -xlogx(probs[i]) + probs[i] * std::log(widths[i]));
    }
    return make_entropy(pairwise_sum(terms), scale);
}

double additivity_defect(const DiscreteDistribution& p, const DiscreteDistribution& q,
                         const EntropyScale& scale) {
    const double joint = shannon_entropy(product_distribution(p, q), scale).value;
    return std::abs(joint - shannon_entropy(p, scale).value - shannon_entropy(q, scale).value);
}

bool majorizes(const DiscreteDistribution& p, const DiscreteDistribution& q, double slack) {
    if (p.size() != q.size()) {
        std::ostringstream msg;
        msg << "majorization needs equal lengths (got " << p.size() << " and " << q.size() << ")";
        throw DomainError("LengthMismatch", msg.str());
    }
    const auto ps = sorted_descending(p.probs());
    const auto qs = sorted_descending(q.probs());
    double sum_p = 0.0;
    double sum_q = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        sum_p += ps[i];
        sum_q += qs[i];
        if (sum_p < sum_q - slack) return false;
    }
    return true;
}

SchurReport schur_concavity_check(const DiscreteDistribution& p, const DiscreteDistribution& q,
                                  const EntropyScale& scale, double slack) {
    SchurReport r;
    r.majorizes = majorizes(p, q, slack);
    r.reverse_majorizes = majorizes(q, p, slack);
    r.incomparable = !r.majorizes && !r.reverse_majorizes;
    r.entropy_p = shannon_entropy(p, scale).value;
    r.entropy_q = shannon_entropy(q, scale).value;
    if (r.majorizes) {
        r.entropy_ordered = r.entropy_p <= r.entropy_q + slack;
    } else if (r.reverse_majorizes) {
        r.entropy_ordered = r.entropy_q <= r.entropy_p + slack;
    }
    return r;
}

}  // namespace shannon

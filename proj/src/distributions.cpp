#include "shannon/distributions.hpp"

#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace shannon {

namespace {

void check_entries(const std::vector<double>& probs) {
    if (probs.empty()) {
        throw DomainError("EmptyDistribution", "distribution must have at least one entry");
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!std::isfinite(probs[i])) {
            std::ostringstream msg;
            msg << "probability at index " << i << " is not finite";
            throw DomainError("NonFiniteProbability", msg.str());
        }
        if (probs[i] < 0.0) {
            std::ostringstream msg;
            msg << "probability at index " << i << " is negative (" << probs[i] << ")";
            throw DomainError("NegativeProbability", msg.str());
        }
    }
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs, double tolerance)
    : probs_(std::move(probs)), tolerance_(tolerance) {
    if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
        throw DomainError("InvalidTolerance", "tolerance must be finite and non-negative");
    }
    check_entries(probs_);
    const double total = pairwise_sum(probs_);
    if (std::abs(total - 1.0) > tolerance_) {
        std::ostringstream msg;
        msg << "probabilities sum to " << std::setprecision(17) << total
            << ", outside tolerance " << std::setprecision(6) << tolerance_;
        throw DomainError("NotNormalized", msg.str());
    }
}

DiscreteDistribution validate_distribution(std::vector<double> probs, double tolerance) {
    return DiscreteDistribution(std::move(probs), tolerance);
}

DiscreteDistribution renormalized(std::vector<double> probs, double tolerance) {
    check_entries(probs);
    const double total = pairwise_sum(probs);
    if (!(total > 0.0)) {
        throw DomainError("NotNormalized", "cannot renormalize a vector with zero total mass");
    }
    for (double& p : probs) p /= total;
    return DiscreteDistribution(std::move(probs), tolerance);
}

DiscreteDistribution product_distribution(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q) {
    std::vector<double> joint;
    joint.reserve(p.size() * q.size());
    for (double pj : p.probs()) {
        for (double qa : q.probs()) joint.push_back(pj * qa);
    }
    const double tol = std::max(p.tolerance(), q.tolerance()) *
                       static_cast<double>(p.size() + q.size());
    return DiscreteDistribution(std::move(joint), tol);
}

BinnedVariable::BinnedVariable(std::vector<double> values, DiscreteDistribution dist,
                               std::vector<double> widths)
    : values_(std::move(values)), dist_(std::move(dist)), widths_(std::move(widths)) {
    if (values_.size() != dist_.size() || widths_.size() != dist_.size()) {
        std::ostringstream msg;
        msg << "values, probs and widths must have equal length (got " << values_.size()
            << ", " << dist_.size() << ", " << widths_.size() << ")";
        throw DomainError("LengthMismatch", msg.str());
    }
    for (std::size_t i = 0; i < widths_.size(); ++i) {
        if (!(widths_[i] > 0.0) || !std::isfinite(widths_[i])) {
            std::ostringstream msg;
            msg << "width at index " << i << " must be positive and finite";
            throw DomainError("NonPositiveWidth", msg.str());
        }
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("ValuesNotIncreasing", "values must be finite");
        }
        if (i > 0 && !(values_[i] > values_[i - 1])) {
            std::ostringstream msg;
            msg << "values must be strictly increasing (index " << i << ")";
            throw DomainError("ValuesNotIncreasing", msg.str());
        }
    }
}

}  // namespace shannon

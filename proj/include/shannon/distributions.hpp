#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace shannon {

inline constexpr double kDefaultTolerance = 1e-9;

/// A finite probability vector (p_1, ..., p_n).
///
/// Entries are non-negative and sum to one within `tolerance()`. Zero
/// entries are kept so that indices stay aligned with any companion arrays
/// (values, widths). Construction never renormalizes; callers that want
/// repair must do it explicitly with `renormalized`.
class DiscreteDistribution {
public:
    /// Throws DomainError: EmptyDistribution, NegativeProbability,
    /// NonFiniteProbability, NotNormalized.
    explicit DiscreteDistribution(std::vector<double> probs,
                                  double tolerance = kDefaultTolerance);

    std::span<const double> probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    double tolerance() const noexcept { return tolerance_; }

private:
    std::vector<double> probs_;
    double tolerance_;
};

/// Free-function form of the constructor.
DiscreteDistribution validate_distribution(std::vector<double> probs,
                                           double tolerance = kDefaultTolerance);

/// Divides every entry by the sum. Negative or non-finite entries are still
/// rejected; only the normalization is repaired.
DiscreteDistribution renormalized(std::vector<double> probs,
                                  double tolerance = kDefaultTolerance);

/// Joint distribution of two independent experiments: entries p_j * q_a in
/// row-major order (j outer, a inner). The result tolerance is the input
/// tolerance scaled by (n + m).
DiscreteDistribution product_distribution(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q);

/// Discrete random variable observed through intervals: value x_i, mass p_i
/// and interval length h_i.
class BinnedVariable {
public:
    /// Throws DomainError: LengthMismatch, NonPositiveWidth, ValuesNotIncreasing.
    BinnedVariable(std::vector<double> values, DiscreteDistribution dist,
                   std::vector<double> widths);

    std::span<const double> values() const noexcept { return values_; }
    const DiscreteDistribution& dist() const noexcept { return dist_; }
    std::span<const double> probs() const noexcept { return dist_.probs(); }
    std::span<const double> widths() const noexcept { return widths_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
    DiscreteDistribution dist_;
    std::vector<double> widths_;
};

}  // namespace shannon

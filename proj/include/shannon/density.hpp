#pragma once

#include <string>
#include <string_view>

namespace shannon {

/// Probability mass left outside the truncated support of a density with
/// unbounded support, split evenly between the two tails (or put entirely in
/// the right tail for the exponential family).
inline constexpr double kTruncationMass = 1e-14;

struct Interval {
    double lo;
    double hi;

    double length() const noexcept { return hi - lo; }
};

/// Continuous density from one of the supported parametric families.
class DensitySpec {
public:
    enum class Family { uniform, gaussian, exponential };

    /// Throws DomainError("InvalidDensity") for a >= b or non-finite bounds.
    static DensitySpec uniform(double a, double b);
    /// Throws DomainError("InvalidDensity") unless sigma > 0.
    static DensitySpec gaussian(double mu, double sigma);
    /// Throws DomainError("InvalidDensity") unless lambda > 0.
    static DensitySpec exponential(double lambda);

    Family family() const noexcept { return family_; }
    std::string_view family_name() const noexcept;
    std::string describe() const;

    // uniform: (a, b); gaussian: (mu, sigma); exponential: (lambda, unused)
    double param1() const noexcept { return p1_; }
    double param2() const noexcept { return p2_; }

    double pdf(double x) const;
    double cdf(double x) const;
    /// 1 - cdf(x), computed without cancellation in the right tail.
    double upper_tail(double x) const;
    /// Mass outside [lo, hi].
    double mass_outside(double lo, double hi) const;

    /// Support with unbounded ends cut at the kTruncationMass quantiles.
    /// Throws DomainError("UnboundedSupport") if the cut points are not
    /// finite or leave more than 1e-9 of the mass outside.
    Interval support() const;

    /// True when the support is a bounded interval (no truncation at all).
    bool has_bounded_support() const noexcept { return family_ == Family::uniform; }

private:
    DensitySpec(Family family, double p1, double p2) : family_(family), p1_(p1), p2_(p2) {}

    Family family_;
    double p1_;
    double p2_;
};

}  // namespace shannon

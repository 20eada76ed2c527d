#pragma once

#include "shannon/discrete.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace shannon {

/// Candidate derivative g = phi' of an entropy summand, defined on (0, 1].
using PhiPrime = std::function<double(double)>;

/// Sampled values (p, g(p)) of a candidate phi'. Requires p in (0, 1] and
/// at least three distinct p.
class PhiPrimeSamples {
public:
    /// Throws DomainError: InvalidSample, DegenerateDesign.
    explicit PhiPrimeSamples(std::vector<std::pair<double, double>> points);

    static PhiPrimeSamples from_function(const PhiPrime& g, std::span<const double> grid);

    std::span<const std::pair<double, double>> points() const noexcept { return points_; }

private:
    std::vector<std::pair<double, double>> points_;
};

/// g(p) ~ A ln p + B.
struct LogAffineFit {
    double A;
    double B;
    double residual;  // max |g - (A ln p + B)| over the samples

    /// Concave phi requires A < 0; A == 0 is rejected.
    bool admissible() const noexcept { return A < 0.0; }
};

/// `count` logarithmically spaced points from `lo` to `hi` inclusive.
/// Defaults to 32 points on [1e-3, 1].
std::vector<double> log_grid(std::size_t count = 32, double lo = 1e-3, double hi = 1.0);

/// max over q in grid_q and p_j, p_k in grid_p of
/// |[g(q p_j) - g(q p_k)] - [g(p_j) - g(p_k)]|.
/// Throws DomainError("EvaluationFailure") when g is not finite at a needed point.
double difference_equation_defect(const PhiPrime& g, std::span<const double> grid_p,
                                  std::span<const double> grid_q);

/// max over p, q in grid of |g(p q) - g(p) - g(q)|.
double cauchy_defect(const PhiPrime& g, std::span<const double> grid);

/// Least-squares fit of g = A ln p + B.
LogAffineFit fit_log_affine(const PhiPrimeSamples& samples);

/// Integrates the fitted phi' back to phi with the boundary condition
/// phi(1) = boundary_log_width (k ln h_i with k = -A):
///   phi(p) = A p ln p + (B - A)(p - 1) + boundary_log_width.
/// Throws DomainError("NotAdmissible") when A >= 0.
PhiFunction reconstruct_phi(const LogAffineFit& fit, double boundary_log_width);

}  // namespace shannon

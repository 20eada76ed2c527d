#pragma once

#include <functional>
#include <span>

namespace shannon {

/// Pairwise (cascade) summation with a fixed split order. The result depends
/// only on the input sequence, so serial and sharded callers agree.
double pairwise_sum(std::span<const double> terms);

/// x * ln(x) with the 0 ln 0 = 0 convention.
double xlogx(double x);

struct QuadratureResult {
    double value;
    double error_estimate;
    double l1_norm;
};

struct QuadratureOptions {
    double abs_tolerance = 1e-10;
    int max_depth = 30;
};

/// Adaptive 15-point Gauss-Kronrod quadrature on [a, b] (Boost.Math), with
/// bisection down to `max_depth` levels.
///
/// Throws DomainError("QuadratureFailure") when the error estimate exceeds
/// the tolerance, a limit is infinite, or the integrand is not finite.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

}  // namespace shannon

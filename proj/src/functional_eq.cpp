#include "shannon/functional_eq.hpp"

#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace shannon {

namespace {

void check_grid(std::span<const double> grid, const char* name) {
    for (double p : grid) {
        if (!(p > 0.0 && p <= 1.0)) {
            std::ostringstream msg;
            msg << name << " point " << p << " is outside (0, 1]";
            throw DomainError("InvalidGrid", msg.str());
        }
    }
}

double eval(const PhiPrime& g, double p) {
    const double v = g(p);
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "g is not finite at p = " << p;
        throw DomainError("EvaluationFailure", msg.str());
    }
    return v;
}

}  // namespace

PhiPrimeSamples::PhiPrimeSamples(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
    std::set<double> distinct;
    for (const auto& [p, g] : points_) {
        if (!(p > 0.0 && p <= 1.0) || !std::isfinite(g)) {
            std::ostringstream msg;
            msg << "sample (" << p << ", " << g << ") needs p in (0, 1] and finite g";
            throw DomainError("InvalidSample", msg.str());
        }
        distinct.insert(p);
    }
    if (distinct.size() < 3) {
        throw DomainError("DegenerateDesign", "need at least three distinct p values");
    }
}

PhiPrimeSamples PhiPrimeSamples::from_function(const PhiPrime& g, std::span<const double> grid) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(grid.size());
    for (double p : grid) pts.emplace_back(p, g(p));
    return PhiPrimeSamples(std::move(pts));
}

std::vector<double> log_grid(std::size_t count, double lo, double hi) {
    if (count < 2 || !(lo > 0.0) || !(hi > lo)) {
        throw DomainError("InvalidGrid", "log grid needs count >= 2 and 0 < lo < hi");
    }
    std::vector<double> grid(count);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

double difference_equation_defect(const PhiPrime& g, std::span<const double> grid_p,
                                  std::span<const double> grid_q) {
    check_grid(grid_p, "grid_p");
    check_grid(grid_q, "grid_q");
    double worst = 0.0;
    for (double q : grid_q) {
        for (double pj : grid_p) {
            const double lhs_j = eval(g, q * pj);
            const double rhs_j = eval(g, pj);
            for (double pk : grid_p) {
                const double lhs = lhs_j - eval(g, q * pk);
                const double rhs = rhs_j - eval(g, pk);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

double cauchy_defect(const PhiPrime& g, std::span<const double> grid) {
    check_grid(grid, "grid");
    double worst = 0.0;
    for (double p : grid) {
        for (double q : grid) {
            worst = std::max(worst, std::abs(eval(g, p * q) - eval(g, p) - eval(g, q)));
        }
    }
    return worst;
}

LogAffineFit fit_log_affine(const PhiPrimeSamples& samples) {
    const auto pts = samples.points();
    const double n = static_cast<double>(pts.size());

    // Centered normal equations for the regression of g on ln p.
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [p, g] : pts) {
        xs.push_back(std::log(p));
        ys.push_back(g);
    }
    const double mean_x = pairwise_sum(xs) / n;
    const double mean_y = pairwise_sum(ys) / n;
    std::vector<double> sxx_terms;
    std::vector<double> sxy_terms;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        sxx_terms.push_back(dx * dx);
        sxy_terms.push_back(dx * (ys[i] - mean_y));
    }
    const double sxx = pairwise_sum(sxx_terms);
    if (!(sxx > 0.0)) throw DomainError("DegenerateDesign", "all sample points share one p");

    LogAffineFit fit{};
    fit.A = pairwise_sum(sxy_terms) / sxx;
    fit.B = mean_y - fit.A * mean_x;
    fit.residual = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fit.residual = std::max(fit.residual, std::abs(ys[i] - (fit.A * xs[i] + fit.B)));
    }
    return fit;
}

PhiFunction reconstruct_phi(const LogAffineFit& fit, double boundary_log_width) {
    if (!fit.admissible()) {
        std::ostringstream msg;
        msg << "fit with A = " << fit.A << " does not give a concave phi (need A < 0)";
        throw DomainError("NotAdmissible", msg.str());
    }
    const double A = fit.A;
    const double B = fit.B;
    const double bw = boundary_log_width;
    std::ostringstream name;
    name.precision(17);
    name << "log-affine(A=" << A << ", B=" << B << ", phi(1)=" << boundary_log_width << ")";
    return PhiFunction(
        name.str(),
        // (B - A)(p - 1) vanishes at p = 1, so phi(1) == bw exactly.
        [A, B, bw](double p) { return A * xlogx(p) + (B - A) * (p - 1.0) + bw; },
        bw - (B - A));
}

}  // namespace shannon

#include "shannon/density.hpp"

#include "shannon/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shannon {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError("InvalidDensity", message);
}

// z > 0 with 0.5 * erfc(z / sqrt 2) == tail, by bisection on the monotone
// standard-normal upper tail.
double standard_normal_upper_quantile(double tail) {
    double lo = 0.0;
    double hi = 40.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(mid * kInvSqrt2) > tail) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

}  // namespace

DensitySpec DensitySpec::uniform(double a, double b) {
    require(std::isfinite(a) && std::isfinite(b), "uniform bounds must be finite");
    require(a < b, "uniform density needs a < b");
    return {Family::uniform, a, b};
}

DensitySpec DensitySpec::gaussian(double mu, double sigma) {
    require(std::isfinite(mu), "gaussian mu must be finite");
    require(std::isfinite(sigma) && sigma > 0.0, "gaussian sigma must be positive");
    return {Family::gaussian, mu, sigma};
}

DensitySpec DensitySpec::exponential(double lambda) {
    require(std::isfinite(lambda) && lambda > 0.0, "exponential lambda must be positive");
    return {Family::exponential, lambda, 0.0};
}

std::string_view DensitySpec::family_name() const noexcept {
    switch (family_) {
        case Family::uniform: return "uniform";
        case Family::gaussian: return "gaussian";
        case Family::exponential: return "exponential";
    }
    return "unknown";
}

std::string DensitySpec::describe() const {
    std::ostringstream out;
    out << family_name() << "(" << p1_;
    if (family_ != Family::exponential) out << ", " << p2_;
    out << ")";
    return out.str();
}

double DensitySpec::pdf(double x) const {
    switch (family_) {
        case Family::uniform:
            return (x >= p1_ && x <= p2_) ? 1.0 / (p2_ - p1_) : 0.0;
        case Family::gaussian: {
            const double z = (x - p1_) / p2_;
            return std::exp(-0.5 * z * z) / (p2_ * std::sqrt(2.0 * std::numbers::pi));
        }
        case Family::exponential:
            return x < 0.0 ? 0.0 : p1_ * std::exp(-p1_ * x);
    }
    return 0.0;
}

double DensitySpec::cdf(double x) const {
    switch (family_) {
        case Family::uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case Family::gaussian:
            return 0.5 * std::erfc(-(x - p1_) / p2_ * kInvSqrt2);
        case Family::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
    }
    return 0.0;
}

double DensitySpec::upper_tail(double x) const {
    switch (family_) {
        case Family::uniform:
            return 1.0 - cdf(x);
        case Family::gaussian:
            return 0.5 * std::erfc((x - p1_) / p2_ * kInvSqrt2);
        case Family::exponential:
            return x <= 0.0 ? 1.0 : std::exp(-p1_ * x);
    }
    return 0.0;
}

double DensitySpec::mass_outside(double lo, double hi) const {
    return cdf(lo) + upper_tail(hi);
}

Interval DensitySpec::support() const {
    Interval s{};
    switch (family_) {
        case Family::uniform:
            s = {p1_, p2_};
            break;
        case Family::gaussian: {
            const double z = standard_normal_upper_quantile(0.5 * kTruncationMass);
            s = {p1_ - z * p2_, p1_ + z * p2_};
            break;
        }
        case Family::exponential:
            s = {0.0, -std::log(kTruncationMass) / p1_};
            break;
    }
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi) ||
        mass_outside(s.lo, s.hi) > 1e-9) {
        throw DomainError("UnboundedSupport",
                          "could not truncate the support of " + describe() +
                              " to a finite interval holding 1 - 1e-9 of the mass");
    }
    return s;
}

}  // namespace shannon

#include "shannon/numerics.hpp"

#include "shannon/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shannon {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

double pairwise_impl(const double* data, std::size_t n) {
    if (n <= kPairwiseBlock) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_impl(data, half) + pairwise_impl(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> terms) {
    return pairwise_impl(terms.data(), terms.size());
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw DomainError("QuadratureFailure", "integration limits must be finite");
    }
    if (a == b) return {0.0, 0.0, 0.0};
    if (a > b) {
        auto r = integrate(f, b, a, options);
        r.value = -r.value;
        return r;
    }

    auto checked = [&f](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg << "integrand is not finite at x = " << x;
            throw DomainError("QuadratureFailure", msg.str());
        }
        return y;
    };
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

    // The rule refines against a tolerance relative to its first estimate;
    // scale it so that the absolute target is what is enforced.
    const double rough = std::abs(Rule::integrate(checked, a, b, 0));
    const double relative = options.abs_tolerance / std::max(rough, 1.0);

    double error = 0.0;
    double l1 = 0.0;
    const double value = Rule::integrate(checked, a, b,
                                         static_cast<unsigned>(options.max_depth),
                                         relative, &error, &l1);
    if (!(error <= options.abs_tolerance)) {
        std::ostringstream msg;
        msg << "tolerance " << options.abs_tolerance << " not reached on [" << a
            << ", " << b << "], error estimate " << error;
        throw DomainError("QuadratureFailure", msg.str());
    }
    return {value, error, l1};
}

}  // namespace shannon

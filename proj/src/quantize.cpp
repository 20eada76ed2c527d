#include "shannon/quantize.hpp"

#include "shannon/discrete.hpp"
#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shannon {

namespace {

constexpr double kSupportTolerance = 1e-9;

double lattice_origin(const DensitySpec& f, const Interval& support, double h) {
    if (f.family() != DensitySpec::Family::gaussian) return support.lo;
    const double centred_edge = f.param1() - 0.5 * h;
    const double steps = std::ceil((centred_edge - support.lo) / h);
    return centred_edge - steps * h;
}

}  // namespace

QuantizationResult quantize_density(const DensitySpec& f, double h,
                                    const QuantizeOptions& options) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        std::ostringstream msg;
        msg << "bin width must be positive and finite, got " << h;
        throw DomainError("NonPositiveWidth", msg.str());
    }
    const Interval support = f.support();
    const double x0 = lattice_origin(f, support, h);

    const double span_bins = (support.hi - x0) / h;
    if (!(span_bins < static_cast<double>(options.max_bins))) {
        std::ostringstream msg;
        msg << "width " << h << " would need more than " << options.max_bins << " bins";
        throw DomainError("TooManyBins", msg.str());
    }
    // Widths that divide the support exactly must not pick up an extra bin
    // from rounding in the division.
    const auto n =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span_bins - 1e-9)));

    const QuadratureOptions quad{options.bin_tolerance, 12};
    const auto density = [&f](double x) { return f.pdf(x); };

    std::vector<double> values(n);
    std::vector<double> probs(n);
    std::vector<double> widths(n, h);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = x0 + static_cast<double>(i) * h;
        const double right = x0 + static_cast<double>(i + 1) * h;
        values[i] = 0.5 * (left + right);
        // The integrand is discontinuous at the edges of a bounded support,
        // so integrate only over the part of the bin inside it.
        const double lo = f.has_bounded_support() ? std::max(left, support.lo) : left;
        const double hi = f.has_bounded_support() ? std::min(right, support.hi) : right;
        probs[i] = lo < hi ? integrate(density, lo, hi, quad).value : 0.0;
    }
    const double binned_hi = x0 + static_cast<double>(n) * h;
    const double deficit = f.has_bounded_support() ? 0.0 : f.mass_outside(x0, binned_hi);

    if (deficit > kSupportTolerance) {
        throw DomainError("UnboundedSupport", "binned range misses more than 1e-9 of the mass");
    }
    return {BinnedVariable(std::move(values),
                           DiscreteDistribution(std::move(probs), options.probability_tolerance),
                           std::move(widths)),
            h, deficit};
}

EntropyValue differential_entropy(const DensitySpec& f, const EntropyScale& scale) {
    const Interval support = f.support();
    const auto integrand = [&f](double x) {
        const double fx = f.pdf(x);
        return fx > 0.0 ? -fx * std::log(fx) : 0.0;
    };
    const double nats = integrate(integrand, support.lo, support.hi, {1e-9, 20}).value;
    return make_entropy(nats, scale);
}

EntropyValue total_entropy_from_density(const DensitySpec& f, double h,
                                        const EntropyScale& scale) {
    return total_entropy(quantize_density(f, h).binned, scale);
}

std::vector<ConvergenceRow> convergence_sweep(const DensitySpec& f,
                                              std::span<const double> h_values,
                                              const EntropyScale& scale) {
    if (h_values.empty()) throw DomainError("InvalidSweep", "sweep needs at least one width");
    for (std::size_t i = 0; i < h_values.size(); ++i) {
        if (!(h_values[i] > 0.0)) throw DomainError("InvalidSweep", "widths must be positive");
        if (i > 0 && !(h_values[i] < h_values[i - 1])) {
            throw DomainError("InvalidSweep", "widths must be strictly decreasing");
        }
    }
    const double hc = differential_entropy(f, scale).value;
    std::vector<ConvergenceRow> rows;
    rows.reserve(h_values.size());
    for (double h : h_values) {
        const double ht = total_entropy_from_density(f, h, scale).value;
        rows.push_back({h, ht, hc, std::abs(ht - hc)});
    }
    return rows;
}

std::vector<double> halving_sequence(double h0, int count) {
    if (!(h0 > 0.0) || count < 1) {
        throw DomainError("InvalidSweep", "halving sequence needs h0 > 0 and count >= 1");
    }
    std::vector<double> hs(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) hs[static_cast<std::size_t>(j)] = std::ldexp(h0, -j);
    return hs;
}

}  // namespace shannon

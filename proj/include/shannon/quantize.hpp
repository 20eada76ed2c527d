#pragma once

#include "shannon/density.hpp"
#include "shannon/distributions.hpp"
#include "shannon/units.hpp"

#include <span>
#include <vector>

namespace shannon {

/// Bin masses of a density at a uniform width h.
struct QuantizationResult {
    BinnedVariable binned;  // values are bin midpoints, widths all equal h
    double h;
    double mass_deficit;  // density mass outside the binned range
};

struct QuantizeOptions {
    double bin_tolerance = 1e-10;         // absolute quadrature tolerance per bin
    double probability_tolerance = 1e-9;  // normalization slack of the result
    std::size_t max_bins = 10'000'000;
};

/// Splits the (truncated) support into bins of width h and integrates the
/// density over each bin.
///
/// Bins are [x0 + i h, x0 + (i+1) h). For bounded-below families x0 is the
/// left end of the support; for the gaussian the lattice is shifted so that
/// one bin is centred on the mean, and x0 is the first lattice edge at or
/// left of the truncated support.
///
/// Throws DomainError: NonPositiveWidth, UnboundedSupport, TooManyBins,
/// QuadratureFailure.
QuantizationResult quantize_density(const DensitySpec& f, double h,
                                    const QuantizeOptions& options = {});

/// -k integral of f ln f over the support, by adaptive quadrature to 1e-9.
EntropyValue differential_entropy(const DensitySpec& f,
                                  const EntropyScale& scale = EntropyScale::nats());

/// Total entropy -k sum p_i ln(p_i / h) of the quantized density.
EntropyValue total_entropy_from_density(const DensitySpec& f, double h,
                                        const EntropyScale& scale = EntropyScale::nats());

struct ConvergenceRow {
    double h;
    double total_entropy;
    double differential_entropy;
    double abs_error;  // |total_entropy - differential_entropy|
};

/// One row per h, in input order. h_values must be positive and strictly
/// decreasing (DomainError("InvalidSweep") otherwise).
std::vector<ConvergenceRow> convergence_sweep(const DensitySpec& f,
                                              std::span<const double> h_values,
                                              const EntropyScale& scale = EntropyScale::nats());

/// h0, h0/2, ..., h0/2^(count-1).
std::vector<double> halving_sequence(double h0, int count);

}  // namespace shannon

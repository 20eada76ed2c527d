#pragma once

#include "shannon/density.hpp"
#include "shannon/distributions.hpp"
#include "shannon/functional_eq.hpp"
#include "shannon/quantize.hpp"
#include "shannon/units.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>

namespace shannon::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Throws DomainError("InvalidJson").
Json parse_json(std::string_view text);

/// Accepts {"probs": [...]} or a bare array. With `renormalize` the entries
/// are rescaled by their sum before validation.
DiscreteDistribution distribution_from_json(const Json& j, double tolerance = kDefaultTolerance,
                                            bool renormalize = false);

/// {"values": [...], "probs": [...], "widths": [...]}; other keys are ignored.
BinnedVariable binned_from_json(const Json& j, double tolerance = kDefaultTolerance,
                                bool renormalize = false);

/// {"family": "uniform", "a": .., "b": ..} | {"family": "gaussian", "mu": .., "sigma": ..}
/// | {"family": "exponential", "lambda": ..}
DensitySpec density_from_json(const Json& j);

Json to_json(const DiscreteDistribution& p);
Json to_json(const BinnedVariable& v);
Json to_json(const QuantizationResult& q);
Json to_json(const EntropyValue& e);
Json to_json(const DensitySpec& f);

/// Rows of "p,phi_prime"; a non-numeric first line is taken as a header.
/// Blank lines are skipped. Throws DomainError("InvalidCsv").
PhiPrimeSamples phi_samples_from_csv(std::string_view text);

/// Shortest decimal string that round-trips to the same double, independent
/// of the global locale.
std::string format_number(double x);

/// h,total_entropy,differential_entropy,abs_error with LF line endings.
std::string convergence_csv(std::span<const ConvergenceRow> rows);

/// x,p,width rows of a quantized density.
std::string quantization_csv(const QuantizationResult& q);

}  // namespace shannon::io

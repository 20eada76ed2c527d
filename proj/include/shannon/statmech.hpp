#pragma once

#include "shannon/density.hpp"
#include "shannon/units.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shannon {

/// Microcanonical ideal monatomic gas (H = sum p^2 / 2m) confined to the
/// energy shell E < H < E + dE. Natural units by default.
struct ShellSpec {
    double E = 1.0;
    double dE = 0.01;
    double V = 1.0;
    std::int64_t N = 1;
    double m = 1.0;
    double planck_h = 1.0;
    bool indistinguishable = true;

    /// Throws DomainError("InvalidShell") unless every field is positive and finite.
    void validate() const;
    /// Non-empty when the shell is thick (dE / E > 0.1).
    std::optional<std::string> warning() const;
};

/// -k integral of f ln(h f): the limit of the quantized Shannon entropy at
/// bin width h. Integrated directly, not via H_C - k ln h.
EntropyValue modified_differential_entropy(const DensitySpec& f, double h,
                                           const EntropyScale& scale = EntropyScale::nats());

/// ln of the phase-space volume with H < E:
/// N ln V + (3N/2) ln(2 pi m E) - lnGamma(3N/2 + 1).
double log_phase_ball_volume(const ShellSpec& spec, double energy);

/// ln Omega, the phase-space volume of the shell, evaluated in the log domain.
double log_phase_shell_volume(const ShellSpec& spec);

/// k [ln Omega - 3N ln h - ln N!], the ln N! term only for indistinguishable
/// particles.
EntropyValue boltzmann_entropy(const ShellSpec& spec,
                               const EntropyScale& scale = EntropyScale::nats());

/// Sackur-Tetrode closed form N k { ln[(V/N)(4 pi m E / (3 N h^2))^(3/2)] + 5/2 }.
EntropyValue sackur_tetrode_entropy(const ShellSpec& spec,
                                    const EntropyScale& scale = EntropyScale::nats());

/// Piecewise-constant density on phase-space cells: value f_i on a cell of
/// volume w_i, with sum w_i f_i = 1.
class DiscretizedShellDensity {
public:
    /// Throws DomainError("InvalidDensity") for mismatched lengths,
    /// non-positive volumes, negative densities or broken normalization.
    DiscretizedShellDensity(std::vector<double> cell_volumes, std::vector<double> densities,
                            double tolerance = 1e-9);

    /// f_i = 1 / sum w_j on every cell.
    static DiscretizedShellDensity uniform(std::vector<double> cell_volumes);

    const std::vector<double>& cell_volumes() const noexcept { return volumes_; }
    const std::vector<double>& densities() const noexcept { return densities_; }
    double total_volume() const noexcept { return total_volume_; }

private:
    std::vector<double> volumes_;
    std::vector<double> densities_;
    double total_volume_;
};

/// -k sum w_i f_i ln(C f_i).
double shell_entropy(const DiscretizedShellDensity& d, double C,
                     const EntropyScale& scale = EntropyScale::nats());

struct MaxEntReport {
    double entropy;                // entropy of the supplied density
    double uniform_entropy;        // entropy of f = 1 / total volume
    double max_perturbed_entropy;  // best entropy among the perturbations
    int trials;
    bool is_maximal;  // no perturbation beats uniform by more than 1e-12
};

/// Compares the uniform density with `trials` random perturbations that keep
/// normalization and non-negativity. Perturbations are drawn in shards of 256
/// trials, each from substream(seed, shard).
MaxEntReport maxent_shell_check(const DiscretizedShellDensity& d, double C,
                                const EntropyScale& scale, int trials, std::uint64_t seed);

/// Two classical entropies of the uniform shell density f = 1 / Omega:
///   cell-normalized:  -k int f ln(h^(3N) f)   = k [ln Omega - 3N ln h]
///   density-scaled:   -k int (f / h^(3N)) ln f = k ln Omega / h^(3N)
/// Only the first reduces to the Boltzmann form k ln(Omega / C).
struct ClassicalComparison {
    double s_cell_normalized;
    double s_density_scaled;  // +-inf or 0 when h^(3N) is not representable
    double gap;               // s_cell_normalized - s_density_scaled
    double s_density_scaled_log_magnitude;  // ln |s_density_scaled|
    int s_density_scaled_sign;
    bool s_density_scaled_representable;
};

ClassicalComparison classical_entropy_comparison(double log_omega, std::int64_t N,
                                                 double planck_h,
                                                 const EntropyScale& scale = EntropyScale::nats());
ClassicalComparison classical_entropy_comparison(const ShellSpec& spec,
                                                 const EntropyScale& scale = EntropyScale::nats());

}  // namespace shannon

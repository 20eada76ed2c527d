#include "shannon/statmech.hpp"

#include "shannon/corpus.hpp"
#include "shannon/error.hpp"
#include "shannon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace shannon {

namespace {

constexpr int kTrialsPerShard = 256;

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << name << " must be positive and finite, got " << x;
        throw DomainError("InvalidShell", msg.str());
    }
}

// f_i = u + t * delta_i along a random direction with sum w_i delta_i = 0.
std::vector<double> spread_perturbation(const std::vector<double>& w, double u, double W,
                                        std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> delta(w.size());
    std::vector<double> weighted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        delta[i] = normal(rng);
        weighted[i] = w[i] * delta[i];
    }
    const double mean = pairwise_sum(weighted) / W;
    double t_max = std::numeric_limits<double>::infinity();
    for (double& d : delta) {
        d -= mean;
        if (d < 0.0) t_max = std::min(t_max, u / -d);
    }
    if (!std::isfinite(t_max)) t_max = 0.0;
    const double t = t_max * (1.0 - unit(rng));  // (0, t_max]
    std::vector<double> f(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) f[i] = std::max(0.0, u + t * delta[i]);
    return f;
}

// Moves a random share of one cell's mass into another cell.
std::vector<double> transfer_perturbation(const std::vector<double>& w, double u,
                                          std::mt19937_64& rng) {
    std::vector<double> f(w.size(), u);
    if (w.size() < 2) return f;
    std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t from = pick(rng);
    std::size_t to = pick(rng);
    while (to == from) to = pick(rng);
    const double mass = u * w[from] * (1.0 - unit(rng));
    f[from] = std::max(0.0, u - mass / w[from]);
    f[to] = u + mass / w[to];
    return f;
}

double entropy_nats(const std::vector<double>& w, const std::vector<double>& f, double C) {
    std::vector<double> terms(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        terms[i] = f[i] > 0.0 ? -w[i] * f[i] * std::log(C * f[i]) : 0.0;
    }
    return pairwise_sum(terms);
}

}  // namespace

void ShellSpec::validate() const {
    require_positive(E, "E");
    require_positive(dE, "dE");
    require_positive(V, "V");
    require_positive(m, "m");
    require_positive(planck_h, "planck_h");
    if (N < 1) throw DomainError("InvalidShell", "N must be at least 1");
}

std::optional<std::string> ShellSpec::warning() const {
    if (dE / E > 0.1) {
        std::ostringstream msg;
        msg << "shell is thick: dE/E = " << dE / E << " exceeds 0.1";
        return msg.str();
    }
    return std::nullopt;
}

EntropyValue modified_differential_entropy(const DensitySpec& f, double h,
                                           const EntropyScale& scale) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("NonPositiveWidth", "bin width must be positive and finite");
    }
    const Interval support = f.support();
    const auto integrand = [&f, h](double x) {
        const double fx = f.pdf(x);
        return fx > 0.0 ? -fx * std::log(h * fx) : 0.0;
    };
    return make_entropy(integrate(integrand, support.lo, support.hi, {1e-9, 20}).value, scale);
}

double log_phase_ball_volume(const ShellSpec& spec, double energy) {
    const double n = static_cast<double>(spec.N);
    return n * std::log(spec.V) + 1.5 * n * std::log(2.0 * std::numbers::pi * spec.m * energy) -
           std::lgamma(1.5 * n + 1.0);
}

double log_phase_shell_volume(const ShellSpec& spec) {
    spec.validate();
    const double n = static_cast<double>(spec.N);
    const double log_inner = log_phase_ball_volume(spec, spec.E);
    // ln Phi(E + dE) - ln Phi(E); the V and Gamma terms cancel.
    const double growth = 1.5 * n * std::log1p(spec.dE / spec.E);
    if (growth < 1e-12) {
        return log_inner + std::log(1.5 * n / spec.E) + std::log(spec.dE);
    }
    if (growth > 30.0) {
        return log_inner + growth + std::log1p(-std::exp(-growth));
    }
    return log_inner + std::log(std::expm1(growth));
}

EntropyValue boltzmann_entropy(const ShellSpec& spec, const EntropyScale& scale) {
    const double n = static_cast<double>(spec.N);
    double s = log_phase_shell_volume(spec) - 3.0 * n * std::log(spec.planck_h);
    if (spec.indistinguishable) s -= std::lgamma(n + 1.0);
    return make_entropy(s, scale);
}

EntropyValue sackur_tetrode_entropy(const ShellSpec& spec, const EntropyScale& scale) {
    spec.validate();
    const double n = static_cast<double>(spec.N);
    const double thermal = 4.0 * std::numbers::pi * spec.m * spec.E /
                           (3.0 * n * spec.planck_h * spec.planck_h);
    return make_entropy(n * (std::log(spec.V / n) + 1.5 * std::log(thermal) + 2.5), scale);
}

DiscretizedShellDensity::DiscretizedShellDensity(std::vector<double> cell_volumes,
                                                 std::vector<double> densities, double tolerance)
    : volumes_(std::move(cell_volumes)), densities_(std::move(densities)) {
    if (volumes_.empty() || volumes_.size() != densities_.size()) {
        throw DomainError("InvalidDensity", "need one density per cell and at least one cell");
    }
    std::vector<double> mass(volumes_.size());
    for (std::size_t i = 0; i < volumes_.size(); ++i) {
        if (!(volumes_[i] > 0.0) || !std::isfinite(volumes_[i])) {
            throw DomainError("InvalidDensity", "cell volumes must be positive and finite");
        }
        if (!(densities_[i] >= 0.0) || !std::isfinite(densities_[i])) {
            throw DomainError("InvalidDensity", "densities must be finite and non-negative");
        }
        mass[i] = volumes_[i] * densities_[i];
    }
    total_volume_ = pairwise_sum(volumes_);
    const double total_mass = pairwise_sum(mass);
    if (std::abs(total_mass - 1.0) > tolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "density integrates to " << total_mass << ", not 1";
        throw DomainError("InvalidDensity", msg.str());
    }
}

DiscretizedShellDensity DiscretizedShellDensity::uniform(std::vector<double> cell_volumes) {
    const double W = pairwise_sum(cell_volumes);
    std::vector<double> f(cell_volumes.size(), 1.0 / W);
    return DiscretizedShellDensity(std::move(cell_volumes), std::move(f));
}

double shell_entropy(const DiscretizedShellDensity& d, double C, const EntropyScale& scale) {
    if (!(C > 0.0) || !std::isfinite(C)) {
        throw DomainError("InvalidArgument", "cell constant C must be positive");
    }
    return scale.apply(entropy_nats(d.cell_volumes(), d.densities(), C));
}

MaxEntReport maxent_shell_check(const DiscretizedShellDensity& d, double C,
                                const EntropyScale& scale, int trials, std::uint64_t seed) {
    if (trials < 0) throw DomainError("InvalidArgument", "trials must be non-negative");
    const auto& w = d.cell_volumes();
    const double W = d.total_volume();
    const double u = 1.0 / W;

    MaxEntReport report{};
    report.entropy = shell_entropy(d, C, scale);
    report.uniform_entropy =
        scale.apply(entropy_nats(w, std::vector<double>(w.size(), u), C));
    report.max_perturbed_entropy = -std::numeric_limits<double>::infinity();
    report.trials = trials;

    const int shards = (trials + kTrialsPerShard - 1) / kTrialsPerShard;
    for (int shard = 0; shard < shards; ++shard) {
        auto rng = substream(seed, static_cast<std::uint64_t>(shard));
        const int begin = shard * kTrialsPerShard;
        const int end = std::min(trials, begin + kTrialsPerShard);
        for (int t = begin; t < end; ++t) {
            const auto f = (t % 2 == 0) ? spread_perturbation(w, u, W, rng)
                                        : transfer_perturbation(w, u, rng);
            const double s = scale.apply(entropy_nats(w, f, C));
            report.max_perturbed_entropy = std::max(report.max_perturbed_entropy, s);
        }
    }
    report.is_maximal = trials == 0 ||
                        report.max_perturbed_entropy <= report.uniform_entropy + 1e-12;
    return report;
}

ClassicalComparison classical_entropy_comparison(double log_omega, std::int64_t N,
                                                 double planck_h, const EntropyScale& scale) {
    if (!std::isfinite(log_omega)) throw DomainError("InvalidArgument", "ln Omega must be finite");
    if (N < 1) throw DomainError("InvalidShell", "N must be at least 1");
    require_positive(planck_h, "planck_h");

    const double log_cells = 3.0 * static_cast<double>(N) * std::log(planck_h);
    ClassicalComparison r{};
    r.s_cell_normalized = scale.apply(log_omega - log_cells);

    const double numerator = scale.apply(log_omega);
    r.s_density_scaled_sign = numerator > 0.0 ? 1 : (numerator < 0.0 ? -1 : 0);
    r.s_density_scaled_log_magnitude = r.s_density_scaled_sign == 0
                                           ? -std::numeric_limits<double>::infinity()
                                           : std::log(std::abs(numerator)) - log_cells;
    const double divisor = std::pow(planck_h, 3.0 * static_cast<double>(N));
    r.s_density_scaled_representable = std::isfinite(divisor) && divisor > 0.0 &&
                                       std::isfinite(numerator / divisor) &&
                                       (numerator == 0.0 || numerator / divisor != 0.0);
    if (r.s_density_scaled_representable) {
        r.s_density_scaled = numerator / divisor;
    } else {
        r.s_density_scaled = r.s_density_scaled_log_magnitude > 0.0
                                 ? r.s_density_scaled_sign * std::numeric_limits<double>::infinity()
                                 : 0.0;
    }
    r.gap = r.s_cell_normalized - r.s_density_scaled;
    return r;
}

ClassicalComparison classical_entropy_comparison(const ShellSpec& spec,
                                                 const EntropyScale& scale) {
    return classical_entropy_comparison(log_phase_shell_volume(spec), spec.N, spec.planck_h,
                                        scale);
}

}  // namespace shannon

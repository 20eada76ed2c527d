#include "shannon/cli.hpp"

#include "shannon/corpus.hpp"
#include "shannon/discrete.hpp"
#include "shannon/error.hpp"
#include "shannon/functional_eq.hpp"
#include "shannon/io.hpp"
#include "shannon/quantize.hpp"
#include "shannon/statmech.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace shannon::cli {

using io::Json;

EntropyScale CommandSpec::scale() const {
    return k ? EntropyScale::custom(*k) : EntropyScale::of(unit);
}

namespace {

// Inline JSON starts with '[' or '{'; inline CSV contains a comma. Anything
// else names a file.
void classify_input(CommandSpec& spec, bool csv) {
    const auto first = spec.input.find_first_not_of(" \t\r\n");
    const bool is_inline =
        first != std::string::npos &&
        (csv ? spec.input.find(',') != std::string::npos
             : (spec.input[first] == '[' || spec.input[first] == '{'));
    if (is_inline) {
        spec.input_source = InputSource::inline_text;
        return;
    }
    spec.input_source = InputSource::path;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(spec.input, ec)) {
        throw FileNotFound("input file not found: " + spec.input);
    }
}

std::string read_input(const CommandSpec& spec) {
    if (spec.input_source == InputSource::inline_text) return spec.input;
    std::ifstream in(spec.input, std::ios::binary);
    if (!in) throw FileNotFound("cannot open input file: " + spec.input);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const CommandSpec& spec) { return io::parse_json(read_input(spec)); }

void add_scale_options(CLI::App* cmd, CommandSpec& spec, std::string& unit_name) {
    cmd->add_option("--unit", unit_name, "Entropy unit")
        ->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--k", spec.k, "Entropy constant k (overrides --unit)")
        ->check(CLI::PositiveNumber);
}

void add_format_option(CLI::App* cmd, std::string& format_name) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

void add_shell_options(CLI::App* cmd, CommandSpec& spec) {
    cmd->add_option("--E", spec.shell.E, "Energy");
    cmd->add_option("--dE", spec.shell.dE, "Shell thickness");
    cmd->add_option("--V", spec.shell.V, "Volume");
    cmd->add_option("--N", spec.shell.N, "Particle count");
    cmd->add_option("--mass", spec.shell.m, "Particle mass");
    cmd->add_option("--planck-h", spec.shell.planck_h, "Phase-cell constant h");
    cmd->add_flag("--indistinguishable,!--distinguishable", spec.shell.indistinguishable,
                  "Divide by N! (default on)");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int run_statmech(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
    const EntropyScale scale = spec.scale();
    switch (spec.statmech_action) {
        case StatmechAction::ideal_gas: {
            spec.shell.validate();
            if (auto w = spec.shell.warning()) err << "warning: " << *w << '\n';
            const double log_omega = log_phase_shell_volume(spec.shell);
            const double s = boltzmann_entropy(spec.shell, scale).value;
            const double st = sackur_tetrode_entropy(spec.shell, scale).value;
            Json j;
            j["lnOmega"] = log_omega;
            j["S"] = s;
            j["S_sackur_tetrode"] = st;
            j["rel_diff"] = (s - st) / std::abs(st);
            j["unit"] = std::string(to_string(scale.unit()));
            emit(out, j);
            return kExitOk;
        }
        case StatmechAction::compare: {
            ClassicalComparison c{};
            double log_omega = 0.0;
            if (spec.log_omega) {
                log_omega = *spec.log_omega;
                c = classical_entropy_comparison(log_omega, spec.shell.N, spec.shell.planck_h,
                                                 scale);
            } else {
                spec.shell.validate();
                if (auto w = spec.shell.warning()) err << "warning: " << *w << '\n';
                log_omega = log_phase_shell_volume(spec.shell);
                c = classical_entropy_comparison(spec.shell, scale);
            }
            Json j;
            j["lnOmega"] = log_omega;
            j["S_cell_normalized"] = c.s_cell_normalized;
            j["S_density_scaled"] = c.s_density_scaled;
            j["gap"] = c.gap;
            j["S_density_scaled_log_magnitude"] = c.s_density_scaled_log_magnitude;
            j["S_density_scaled_sign"] = c.s_density_scaled_sign;
            j["S_density_scaled_representable"] = c.s_density_scaled_representable;
            j["unit"] = std::string(to_string(scale.unit()));
            emit(out, j);
            return kExitOk;
        }
        case StatmechAction::maxent: {
            DiscretizedShellDensity d =
                spec.input_source == InputSource::none
                    ? DiscretizedShellDensity::uniform(
                          std::vector<double>(static_cast<std::size_t>(spec.cells), 1.0))
                    : [&] {
                          const Json j = load_json(spec);
                          const Json& w = j.at("cell_volumes");
                          const Json& f = j.at("densities");
                          return DiscretizedShellDensity(w.get<std::vector<double>>(),
                                                         f.get<std::vector<double>>());
                      }();
            const auto r = maxent_shell_check(d, spec.cell_constant, scale, spec.trials, spec.seed);
            Json j;
            j["entropy"] = r.entropy;
            j["uniform_entropy"] = r.uniform_entropy;
            j["max_perturbed_entropy"] = r.max_perturbed_entropy;
            j["trials"] = r.trials;
            j["seed"] = spec.seed;
            j["is_maximal"] = r.is_maximal;
            emit(out, j);
            return kExitOk;
        }
    }
    return kExitInternal;
}

}  // namespace

std::optional<CommandSpec> parse_args(const std::vector<std::string>& args, std::string* help) {
    CommandSpec spec;
    std::string unit_name = "nats";
    std::string format_name = "json";
    double h_start = 0.0;
    int halvings = 0;

    CLI::App app{"Shannon, total, differential and microcanonical entropy toolkit", "shannon"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto* discrete = app.add_subcommand("discrete", "Shannon entropy of a distribution");
    discrete->add_option("--probs", spec.input, "JSON array / {\"probs\":[...]} or file")
        ->required();
    discrete->add_option("--tolerance", spec.tolerance, "Normalization tolerance");
    discrete->add_flag("--renormalize", spec.renormalize, "Rescale probabilities by their sum");
    add_scale_options(discrete, spec, unit_name);
    add_format_option(discrete, format_name);

    auto* total = app.add_subcommand("total", "Total entropy of a binned variable");
    total->add_option("--input", spec.input, "{\"values\",\"probs\",\"widths\"} JSON or file")
        ->required();
    total->add_option("--tolerance", spec.tolerance, "Normalization tolerance");
    total->add_flag("--renormalize", spec.renormalize, "Rescale probabilities by their sum");
    add_scale_options(total, spec, unit_name);
    add_format_option(total, format_name);

    auto* differential = app.add_subcommand("differential", "Differential entropy of a density");
    differential->add_option("--density", spec.input, "Density JSON or file")->required();
    add_scale_options(differential, spec, unit_name);
    add_format_option(differential, format_name);

    auto* modified = app.add_subcommand("modified", "Modified differential entropy at width h");
    modified->add_option("--density", spec.input, "Density JSON or file")->required();
    modified->add_option("--h", spec.h, "Bin width")->required();
    add_scale_options(modified, spec, unit_name);
    add_format_option(modified, format_name);

    auto* quantize = app.add_subcommand("quantize", "Bin a density at width h");
    quantize->add_option("--density", spec.input, "Density JSON or file")->required();
    quantize->add_option("--h", spec.h, "Bin width")->required();
    add_scale_options(quantize, spec, unit_name);
    add_format_option(quantize, format_name);

    auto* converge = app.add_subcommand("converge", "Total vs differential entropy sweep");
    converge->add_option("--density", spec.input, "Density JSON or file")->required();
    auto* start_opt = converge->add_option("--h-start", h_start, "First bin width");
    auto* halvings_opt = converge->add_option("--halvings", halvings, "Number of widths");
    auto* list_opt =
        converge->add_option("--h-values", spec.h_values, "Comma-separated widths")
            ->delimiter(',');
    list_opt->excludes(start_opt)->excludes(halvings_opt);
    add_scale_options(converge, spec, unit_name);
    add_format_option(converge, format_name);

    auto* axioms = app.add_subcommand("axioms", "Randomized axiom and Schur-concavity suite");
    axioms->add_option("--seed", spec.seed, "Random seed");
    axioms->add_option("--distributions", spec.distributions, "Random distributions")
        ->check(CLI::NonNegativeNumber);
    axioms->add_option("--pairs", spec.product_pairs, "Product / concavity pairs")
        ->check(CLI::NonNegativeNumber);
    axioms->add_option("--schur-pairs", spec.schur_pairs, "Majorization pairs")
        ->check(CLI::NonNegativeNumber);
    axioms->add_option("--max-n", spec.max_n, "Largest distribution size")
        ->check(CLI::PositiveNumber);
    add_scale_options(axioms, spec, unit_name);
    add_format_option(axioms, format_name);

    auto* fit = app.add_subcommand("fit-phi", "Fit phi'(p) = A ln p + B to CSV samples");
    fit->add_option("--input", spec.input, "CSV of p,phi_prime rows (file or inline)")
        ->required();
    add_format_option(fit, format_name);

    auto* statmech = app.add_subcommand("statmech", "Microcanonical ideal gas");
    statmech->require_subcommand(1);
    auto* ideal = statmech->add_subcommand("ideal-gas", "Boltzmann vs Sackur-Tetrode entropy");
    add_shell_options(ideal, spec);
    add_scale_options(ideal, spec, unit_name);
    add_format_option(ideal, format_name);
    auto* compare = statmech->add_subcommand("compare", "Cell-normalized vs density-scaled entropy");
    add_shell_options(compare, spec);
    compare->add_option("--ln-omega", spec.log_omega, "Use this ln Omega instead of the ideal gas");
    add_scale_options(compare, spec, unit_name);
    add_format_option(compare, format_name);
    auto* maxent = statmech->add_subcommand("maxent", "Perturbation check of the uniform density");
    maxent->add_option("--cells", spec.cells, "Number of equal cells")->check(CLI::PositiveNumber);
    maxent->add_option("--input", spec.input, "{\"cell_volumes\",\"densities\"} JSON or file");
    maxent->add_option("--C", spec.cell_constant, "Cell constant C")->check(CLI::PositiveNumber);
    maxent->add_option("--trials", spec.trials, "Perturbations")->check(CLI::NonNegativeNumber);
    maxent->add_option("--seed", spec.seed, "Random seed");
    add_scale_options(maxent, spec, unit_name);
    add_format_option(maxent, format_name);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        if (help) *help = app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        if (help) *help = app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    spec.unit = parse_unit(unit_name);
    spec.format = format_name == "csv" ? OutputFormat::csv : OutputFormat::json;

    if (discrete->parsed()) {
        spec.subcommand = Subcommand::discrete;
    } else if (total->parsed()) {
        spec.subcommand = Subcommand::total;
    } else if (differential->parsed()) {
        spec.subcommand = Subcommand::differential;
    } else if (modified->parsed()) {
        spec.subcommand = Subcommand::modified;
    } else if (quantize->parsed()) {
        spec.subcommand = Subcommand::quantize;
    } else if (converge->parsed()) {
        spec.subcommand = Subcommand::converge;
        if (spec.h_values.empty()) {
            if (start_opt->count() == 0) {
                throw UsageError("converge needs --h-start (with --halvings) or --h-values");
            }
            if (!(h_start > 0.0)) throw UsageError("--h-start must be positive");
            if (halvings_opt->count() == 0) halvings = 6;
            if (halvings < 1) throw UsageError("--halvings must be at least 1");
            spec.h_values = halving_sequence(h_start, halvings);
        }
    } else if (axioms->parsed()) {
        spec.subcommand = Subcommand::axioms;
    } else if (fit->parsed()) {
        spec.subcommand = Subcommand::fit_phi;
    } else {
        spec.subcommand = Subcommand::statmech;
        if (ideal->parsed()) {
            spec.statmech_action = StatmechAction::ideal_gas;
        } else if (compare->parsed()) {
            spec.statmech_action = StatmechAction::compare;
        } else {
            spec.statmech_action = StatmechAction::maxent;
        }
    }

    if (!spec.input.empty()) classify_input(spec, spec.subcommand == Subcommand::fit_phi);

    const bool csv_capable =
        spec.subcommand == Subcommand::converge || spec.subcommand == Subcommand::quantize;
    if (spec.format == OutputFormat::csv && !csv_capable) {
        throw UsageError("--format csv is only available for quantize and converge");
    }
    return spec;
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
    const EntropyScale scale = spec.scale();
    switch (spec.subcommand) {
        case Subcommand::discrete: {
            const auto p = io::distribution_from_json(load_json(spec), spec.tolerance,
                                                      spec.renormalize);
            emit(out, io::to_json(shannon_entropy(p, scale)));
            return kExitOk;
        }
        case Subcommand::total: {
            const auto v =
                io::binned_from_json(load_json(spec), spec.tolerance, spec.renormalize);
            emit(out, io::to_json(total_entropy(v, scale)));
            return kExitOk;
        }
        case Subcommand::differential: {
            const auto f = io::density_from_json(load_json(spec));
            emit(out, io::to_json(differential_entropy(f, scale)));
            return kExitOk;
        }
        case Subcommand::modified: {
            const auto f = io::density_from_json(load_json(spec));
            emit(out, io::to_json(modified_differential_entropy(f, spec.h, scale)));
            return kExitOk;
        }
        case Subcommand::quantize: {
            const auto f = io::density_from_json(load_json(spec));
            const auto q = quantize_density(f, spec.h);
            if (spec.format == OutputFormat::csv) {
                out << io::quantization_csv(q);
            } else {
                Json j = io::to_json(q);
                j["total_entropy"] = io::to_json(total_entropy(q.binned, scale));
                emit(out, j);
            }
            return kExitOk;
        }
        case Subcommand::converge: {
            const auto f = io::density_from_json(load_json(spec));
            const auto rows = convergence_sweep(f, spec.h_values, scale);
            if (spec.format == OutputFormat::csv) {
                out << io::convergence_csv(rows);
            } else {
                Json arr = Json::array();
                for (const auto& r : rows) {
                    Json row;
                    row["h"] = r.h;
                    row["total_entropy"] = r.total_entropy;
                    row["differential_entropy"] = r.differential_entropy;
                    row["abs_error"] = r.abs_error;
                    arr.push_back(row);
                }
                Json j;
                j["density"] = io::to_json(f);
                j["unit"] = std::string(to_string(scale.unit()));
                j["rows"] = arr;
                emit(out, j);
            }
            return kExitOk;
        }
        case Subcommand::axioms: {
            AxiomSuiteConfig config;
            config.seed = spec.seed;
            config.distributions = spec.distributions;
            config.product_pairs = spec.product_pairs;
            config.concavity_trials = spec.product_pairs;
            config.schur_pairs = spec.schur_pairs;
            config.max_n = static_cast<std::size_t>(spec.max_n);
            config.scale = scale;
            const auto r = run_axiom_suite(config);
            Json j;
            j["seed"] = spec.seed;
            j["distributions"] = r.distributions_checked;
            j["negative_entropies"] = r.negative_entropies;
            j["min_entropy"] = r.min_entropy;
            j["max_excess_over_log_n"] = r.max_excess_over_log_n;
            j["max_uniform_gap"] = r.max_uniform_gap;
            j["non_uniform_at_maximum"] = r.non_uniform_at_maximum;
            j["max_additivity_defect"] = r.max_additivity_defect;
            j["min_concavity_slack"] = r.min_concavity_slack;
            j["schur_pairs"] = r.schur_pairs_checked;
            j["schur_failures"] = r.schur_failures;
            j["passed"] = r.all_ok();
            emit(out, j);
            return kExitOk;
        }
        case Subcommand::fit_phi: {
            const auto fit = fit_log_affine(io::phi_samples_from_csv(read_input(spec)));
            Json j;
            j["A"] = fit.A;
            j["B"] = fit.B;
            j["residual"] = fit.residual;
            j["admissible"] = fit.admissible();
            emit(out, j);
            return kExitOk;
        }
        case Subcommand::statmech:
            return run_statmech(spec, out, err);
    }
    return kExitInternal;
}

namespace {

void emit_error(std::ostream& out, const std::string& kind, const std::string& message) {
    Json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    emit(out, j);
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        std::string help;
        const auto spec = parse_args(args, &help);
        if (!spec) {
            out << help;
            return kExitOk;
        }
        const int code = run(*spec, out, err);
        out.flush();
        if (!out) {
            err << "internal error: failed to write output\n";
            return kExitInternal;
        }
        return code;
    } catch (const UsageError& e) {
        emit_error(out, "UsageError", e.what());
        err << "usage error: " << e.what() << "\nrun 'shannon --help' for usage\n";
        return kExitUsage;
    } catch (const FileNotFound& e) {
        emit_error(out, "FileNotFound", e.what());
        err << "error: " << e.what() << '\n';
        return kExitNoInput;
    } catch (const DomainError& e) {
        emit_error(out, e.kind(), e.what());
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitData;
    } catch (const Json::exception& e) {
        emit_error(out, "InvalidJson", e.what());
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        emit_error(out, "InternalError", e.what());
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace shannon::cli

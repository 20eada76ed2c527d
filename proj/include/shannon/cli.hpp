#pragma once

#include "shannon/statmech.hpp"
#include "shannon/units.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shannon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitInternal = 70;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand {
    discrete,
    total,
    differential,
    modified,
    quantize,
    converge,
    axioms,
    fit_phi,
    statmech
};

enum class StatmechAction { ideal_gas, compare, maxent };
enum class InputSource { none, inline_text, path };
enum class OutputFormat { json, csv };

struct CommandSpec {
    Subcommand subcommand = Subcommand::discrete;
    StatmechAction statmech_action = StatmechAction::ideal_gas;

    InputSource input_source = InputSource::none;
    std::string input;  // inline text or a file path

    Unit unit = Unit::nats;
    std::optional<double> k;  // overrides the unit preset
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 42;

    double tolerance = 1e-9;
    bool renormalize = false;

    double h = 0.0;
    std::vector<double> h_values;  // converge

    // axioms
    int distributions = 10000;
    int product_pairs = 1000;
    int schur_pairs = 1000;
    int max_n = 64;

    // statmech
    ShellSpec shell;
    std::optional<double> log_omega;
    int cells = 16;
    int trials = 1000;
    double cell_constant = 1.0;

    EntropyScale scale() const;
};

/// Parses arguments (without the program name). Throws UsageError for bad
/// or unknown flags and FileNotFound when a path input does not exist.
/// Returns std::nullopt when help was requested; `help` receives the text.
std::optional<CommandSpec> parse_args(const std::vector<std::string>& args, std::string* help);

/// Executes a parsed command, writing the result envelope to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

/// parse_args + run with every failure mapped to its exit code and a JSON
/// error envelope on `out`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shannon::cli

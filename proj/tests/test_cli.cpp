#include "cli_runner.hpp"

#include "shannon/cli.hpp"
#include "shannon/io.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

using namespace shannon;
using namespace shannon::cli;
using shannon::testing::data_path;
using shannon::testing::run_cli;

namespace {

CommandSpec parse(const std::vector<std::string>& args) {
    std::string help;
    auto spec = parse_args(args, &help);
    if (!spec) throw std::runtime_error("help requested");
    return *spec;
}

std::pair<int, std::string> run_in_process(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str()};
}

}  // namespace

TEST(ParseArgs, CanonicalDiscrete) {
    const auto spec = parse({"discrete", "--probs", "[0.5,0.5]", "--unit", "bits"});
    EXPECT_EQ(spec.subcommand, Subcommand::discrete);
    EXPECT_EQ(spec.input_source, InputSource::inline_text);
    EXPECT_EQ(spec.unit, Unit::bits);
    EXPECT_EQ(spec.format, OutputFormat::json);
}

TEST(ParseArgs, ConvergeHalvings) {
    const auto spec = parse({"converge", "--density", data_path("gaussian.json"), "--h-start",
                             "0.5", "--halvings", "6", "--format", "csv"});
    EXPECT_EQ(spec.subcommand, Subcommand::converge);
    EXPECT_EQ(spec.input_source, InputSource::path);
    EXPECT_EQ(spec.format, OutputFormat::csv);
    const std::vector<double> expected = {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
    EXPECT_EQ(spec.h_values, expected);
}

TEST(ParseArgs, StatmechFlags) {
    const auto spec = parse({"statmech", "ideal-gas", "--E", "150", "--dE", "1.5", "--V", "1000",
                             "--N", "100", "--mass", "2", "--planck-h", "0.5",
                             "--distinguishable", "--k", "1.380649e-23"});
    EXPECT_EQ(spec.statmech_action, StatmechAction::ideal_gas);
    EXPECT_EQ(spec.shell.E, 150.0);
    EXPECT_EQ(spec.shell.N, 100);
    EXPECT_EQ(spec.shell.m, 2.0);
    EXPECT_EQ(spec.shell.planck_h, 0.5);
    EXPECT_FALSE(spec.shell.indistinguishable);
    ASSERT_TRUE(spec.k.has_value());
    EXPECT_EQ(spec.scale().unit(), Unit::custom);
}

TEST(ParseArgs, UsageErrors) {
    EXPECT_THROW(parse({}), UsageError);
    EXPECT_THROW(parse({"discrete"}), UsageError);
    EXPECT_THROW(parse({"discrete", "--probs", "[1]", "--bogus"}), UsageError);
    EXPECT_THROW(parse({"discrete", "--probs", "[1]", "--unit", "hartleys"}), UsageError);
    EXPECT_THROW(parse({"discrete", "--probs", "[1]", "--format", "csv"}), UsageError);
    EXPECT_THROW(parse({"converge", "--density", "{}"}), UsageError);
    EXPECT_THROW(parse({"converge", "--density", "{}", "--h-start", "0.5", "--h-values", "0.1"}),
                 UsageError);
    EXPECT_THROW(parse({"statmech"}), UsageError);
}

TEST(ParseArgs, MissingFile) {
    EXPECT_THROW(parse({"differential", "--density", "/no/such/file.json"}), FileNotFound);
}

TEST(ParseArgs, Help) {
    std::string help;
    EXPECT_FALSE(parse_args({"--help"}, &help).has_value());
    EXPECT_NE(help.find("converge"), std::string::npos);
}

TEST(Run, DiscreteOutputIsExact) {
    EXPECT_EQ(run_in_process({"discrete", "--probs", "[0.5,0.5]"}),
              std::make_pair(0, std::string("{\"value\":0.6931471805599453,\"unit\":\"nats\"}\n")));
    EXPECT_EQ(run_in_process({"discrete", "--probs", "[0.5,0.5]", "--unit", "bits"}),
              std::make_pair(0, std::string("{\"value\":1.0,\"unit\":\"bits\"}\n")));
}

TEST(Run, NotNormalizedEnvelope) {
    const auto [code, out] = run_in_process({"discrete", "--probs", "[0.6,0.5]"});
    EXPECT_EQ(code, kExitData);
    const auto j = io::parse_json(out);
    EXPECT_EQ(j["error"]["kind"], "NotNormalized");
    EXPECT_TRUE(j["error"]["message"].is_string());
}

TEST(Run, RenormalizeFlag) {
    const auto [code, out] = run_in_process({"discrete", "--probs", "[1,1]", "--renormalize"});
    EXPECT_EQ(code, 0);
    EXPECT_EQ(out, "{\"value\":0.6931471805599453,\"unit\":\"nats\"}\n");
}

TEST(Run, CustomK) {
    const auto [code, out] = run_in_process({"discrete", "--probs", "[0.5,0.5]", "--k", "2"});
    EXPECT_EQ(code, 0);
    const auto j = io::parse_json(out);
    EXPECT_EQ(j["unit"], "custom");
    EXPECT_EQ(j["k"], 2.0);
    EXPECT_EQ(j["value"], 2 * 0.6931471805599453);
}

TEST(Run, TotalFromFile) {
    const auto [code, out] = run_in_process({"total", "--input", data_path("binned.json")});
    EXPECT_EQ(code, 0);
    // -(0.25 ln 0.25 + 0.5 ln 0.5 + 0.25 ln 0.25) = 1.5 ln 2
    EXPECT_NEAR(io::parse_json(out)["value"].get<double>(), 1.0397207708399179, 1e-15);
}

TEST(Run, ConvergeCsv) {
    const auto [code, out] = run_in_process({"converge", "--density", data_path("gaussian.json"),
                                             "--h-start", "0.5", "--halvings", "3", "--format",
                                             "csv"});
    ASSERT_EQ(code, 0);
    std::istringstream lines(out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "h,total_entropy,differential_entropy,abs_error");
    std::vector<double> errors;
    while (std::getline(lines, line)) {
        errors.push_back(std::stod(line.substr(line.rfind(',') + 1)));
    }
    ASSERT_EQ(errors.size(), 3u);
    EXPECT_GT(errors[0], errors[1]);
    EXPECT_GT(errors[1], errors[2]);
    EXPECT_EQ(out.find('\r'), std::string::npos);
}

TEST(Run, FitPhi) {
    const auto [code, out] = run_in_process({"fit-phi", "--input", data_path("phi_log_affine.csv")});
    ASSERT_EQ(code, 0);
    const auto j = io::parse_json(out);
    EXPECT_NEAR(j["A"].get<double>(), -2.0, 1e-12);
    EXPECT_NEAR(j["B"].get<double>(), 3.0, 1e-12);
    EXPECT_LE(j["residual"].get<double>(), 1e-10);
    EXPECT_EQ(j["admissible"], true);
}

TEST(Run, QuantizeJsonFeedsTotal) {
    const auto [code, out] = run_in_process(
        {"quantize", "--density", R"({"family":"exponential","lambda":2})", "--h", "0.25"});
    ASSERT_EQ(code, 0);
    const auto [code2, out2] = run_in_process({"total", "--input", out});
    ASSERT_EQ(code2, 0);
    EXPECT_EQ(io::parse_json(out)["total_entropy"].dump(), io::parse_json(out2).dump());
}

TEST(Run, StatmechCompare) {
    const auto [code, out] =
        run_in_process({"statmech", "compare", "--ln-omega", "8", "--N", "1", "--planck-h", "2"});
    ASSERT_EQ(code, 0);
    const auto j = io::parse_json(out);
    EXPECT_NEAR(j["gap"].get<double>(), 4.920558458320164, 1e-10);
}

TEST(Run, DomainErrorsMapTo65) {
    EXPECT_EQ(run_in_process({"differential", "--density", R"({"family":"gaussian","sigma":-1})"})
                  .first,
              kExitData);
    EXPECT_EQ(run_in_process({"modified", "--density", R"({"family":"uniform","a":0,"b":1})",
                              "--h", "0"})
                  .first,
              kExitData);
    EXPECT_EQ(run_in_process({"discrete", "--probs", "[0.5,"}).first, kExitData);
    EXPECT_EQ(run_in_process({"statmech", "ideal-gas", "--V", "-1"}).first, kExitData);
}

// End-to-end through the installed binary.

TEST(EndToEnd, ExitCodeMatrix) {
    EXPECT_EQ(run_cli("discrete --probs '[0.5,0.5]'").code, 0);
    EXPECT_EQ(run_cli("discrete --probs '[0.5,0.5]' --nope").code, 2);
    EXPECT_EQ(run_cli("discrete --probs '[0.6,0.5]'").code, 65);
    EXPECT_EQ(run_cli("differential --density /no/such/density.json").code, 66);
    EXPECT_EQ(run_cli("discrete --probs '[0.5,0.5]'", "> /dev/full").code, 70);
}

TEST(EndToEnd, ErrorEnvelopeOnStdout) {
    const auto r = run_cli("discrete --probs '[0.6,0.5]'");
    EXPECT_EQ(io::parse_json(r.out)["error"]["kind"], "NotNormalized");
    const auto usage = run_cli("frobnicate");
    EXPECT_EQ(io::parse_json(usage.out)["error"]["kind"], "UsageError");
}

TEST(EndToEnd, Deterministic) {
    const std::vector<std::string> commands = {
        "axioms --seed 7 --distributions 2000", "statmech maxent --cells 16 --seed 3",
        "converge --density " + data_path("gaussian.json") + " --h-start 0.5 --halvings 4"};
    for (const auto& args : commands) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

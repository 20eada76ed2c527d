#include "shannon/io.hpp"

#include "shannon/error.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace shannon::io {

namespace {

std::vector<double> number_array(const Json& j, const char* key) {
    if (!j.is_array()) {
        throw DomainError("InvalidJson", std::string("'") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) {
            throw DomainError("InvalidJson",
                              std::string("'") + key + "' must contain only numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw DomainError("InvalidJson", std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

double number(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number()) {
        throw DomainError("InvalidJson", std::string("'") + key + "' must be a number");
    }
    return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
    return j.contains(key) ? number(j, key) : fallback;
}

Json number_list(std::span<const double> xs) {
    Json arr = Json::array();
    for (double x : xs) arr.push_back(x);
    return arr;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("InvalidJson", e.what());
    }
}

DiscreteDistribution distribution_from_json(const Json& j, double tolerance, bool renormalize) {
    const Json& arr = j.is_array() ? j : member(j, "probs");
    auto probs = number_array(arr, "probs");
    return renormalize ? renormalized(std::move(probs), tolerance)
                       : DiscreteDistribution(std::move(probs), tolerance);
}

BinnedVariable binned_from_json(const Json& j, double tolerance, bool renormalize) {
    return BinnedVariable(number_array(member(j, "values"), "values"),
                          distribution_from_json(member(j, "probs"), tolerance, renormalize),
                          number_array(member(j, "widths"), "widths"));
}

DensitySpec density_from_json(const Json& j) {
    const Json& fam = member(j, "family");
    if (!fam.is_string()) throw DomainError("InvalidJson", "'family' must be a string");
    const auto name = fam.get<std::string>();
    if (name == "uniform") return DensitySpec::uniform(number(j, "a"), number(j, "b"));
    if (name == "gaussian") {
        return DensitySpec::gaussian(number_or(j, "mu", 0.0), number_or(j, "sigma", 1.0));
    }
    if (name == "exponential") return DensitySpec::exponential(number_or(j, "lambda", 1.0));
    throw DomainError("InvalidDensity", "unknown density family '" + name + "'");
}

Json to_json(const DiscreteDistribution& p) {
    Json j;
    j["probs"] = number_list(p.probs());
    return j;
}

Json to_json(const BinnedVariable& v) {
    Json j;
    j["values"] = number_list(v.values());
    j["probs"] = number_list(v.probs());
    j["widths"] = number_list(v.widths());
    return j;
}

Json to_json(const QuantizationResult& q) {
    Json j = to_json(q.binned);
    j["h"] = q.h;
    j["mass_deficit"] = q.mass_deficit;
    return j;
}

Json to_json(const EntropyValue& e) {
    Json j;
    j["value"] = e.value;
    j["unit"] = std::string(to_string(e.unit()));
    if (e.unit() == Unit::custom) j["k"] = e.k();
    return j;
}

Json to_json(const DensitySpec& f) {
    Json j;
    j["family"] = std::string(f.family_name());
    switch (f.family()) {
        case DensitySpec::Family::uniform:
            j["a"] = f.param1();
            j["b"] = f.param2();
            break;
        case DensitySpec::Family::gaussian:
            j["mu"] = f.param1();
            j["sigma"] = f.param2();
            break;
        case DensitySpec::Family::exponential:
            j["lambda"] = f.param1();
            break;
    }
    return j;
}

PhiPrimeSamples phi_samples_from_csv(std::string_view text) {
    std::vector<std::pair<double, double>> points;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;

        const auto comma = line.find(',');
        double p = 0.0;
        double g = 0.0;
        const bool ok = comma != std::string_view::npos &&
                        parse_double(line.substr(0, comma), p) &&
                        parse_double(line.substr(comma + 1), g);
        if (!ok) {
            if (points.empty() && line_no == 1) continue;  // header
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'p,phi_prime'";
            throw DomainError("InvalidCsv", msg.str());
        }
        points.emplace_back(p, g);
    }
    return PhiPrimeSamples(std::move(points));
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string convergence_csv(std::span<const ConvergenceRow> rows) {
    std::string out = "h,total_entropy,differential_entropy,abs_error\n";
    for (const auto& r : rows) {
        out += format_number(r.h) + ',' + format_number(r.total_entropy) + ',' +
               format_number(r.differential_entropy) + ',' + format_number(r.abs_error) + '\n';
    }
    return out;
}

std::string quantization_csv(const QuantizationResult& q) {
    std::string out = "x,p,width\n";
    const auto& v = q.binned;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += format_number(v.values()[i]) + ',' + format_number(v.probs()[i]) + ',' +
               format_number(v.widths()[i]) + '\n';
    }
    return out;
}

}  // namespace shannon::io

#include "shannon/units.hpp"

#include "shannon/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace shannon {

std::string_view to_string(Unit unit) {
    switch (unit) {
        case Unit::nats: return "nats";
        case Unit::bits: return "bits";
        case Unit::custom: return "custom";
    }
    return "custom";
}

Unit parse_unit(std::string_view name) {
    if (name == "nats") return Unit::nats;
    if (name == "bits") return Unit::bits;
    throw DomainError("UnknownUnit", "unit must be 'nats' or 'bits', got '" +
                                         std::string(name) + "'");
}

EntropyScale EntropyScale::bits() { return {1.0 / std::numbers::ln2, Unit::bits}; }

EntropyScale EntropyScale::custom(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("InvalidConstant", "entropy constant k must be positive and finite");
    }
    return {k, Unit::custom};
}

EntropyScale EntropyScale::of(Unit unit) {
    switch (unit) {
        case Unit::nats: return nats();
        case Unit::bits: return bits();
        case Unit::custom: break;
    }
    throw DomainError("InvalidConstant", "custom unit requires an explicit k");
}

double EntropyScale::apply(double nats_value) const {
    if (unit_ == Unit::bits) return nats_value / std::numbers::ln2;
    return k_ * nats_value;
}

}  // namespace shannon

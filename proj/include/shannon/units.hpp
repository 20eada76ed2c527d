#pragma once

#include <string>
#include <string_view>

namespace shannon {

enum class Unit { nats, bits, custom };

std::string_view to_string(Unit unit);
Unit parse_unit(std::string_view name);

/// The constant k of H = -k sum p ln p. All entropy kernels work in nats;
/// `apply` converts a nats value to this scale.
class EntropyScale {
public:
    static EntropyScale nats() { return {1.0, Unit::nats}; }
    static EntropyScale bits();
    /// Arbitrary positive k, e.g. Boltzmann's constant in J/K.
    static EntropyScale custom(double k);
    static EntropyScale of(Unit unit);

    double k() const noexcept { return k_; }
    Unit unit() const noexcept { return unit_; }

    // bits divide by ln 2 rather than multiply by its rounded reciprocal,
    // so that one fair coin is exactly 1.0.
    double apply(double nats_value) const;

private:
    EntropyScale(double k, Unit unit) : k_(k), unit_(unit) {}

    double k_;
    Unit unit_;
};

struct EntropyValue {
    double value;
    EntropyScale scale;

    double k() const noexcept { return scale.k(); }
    Unit unit() const noexcept { return scale.unit(); }
};

inline EntropyValue make_entropy(double nats_value, const EntropyScale& scale) {
    return {scale.apply(nats_value), scale};
}

}  // namespace shannon

#pragma once

#include <stdexcept>
#include <string>

namespace shannon {

/// Failure caused by invalid input data or a violated mathematical
/// precondition. `kind()` is a stable identifier (e.g. "NotNormalized")
/// that the command-line front end copies into its error envelope.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace shannon

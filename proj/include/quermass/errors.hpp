#pragma once

#include <stdexcept>
#include <string>

namespace quermass {

/// Bad argument: wrong dimension, non-unit vector, violated precondition.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Geometric failure: root bracketing lost, non-positive radial value,
/// offset outside the admissible band, degenerate configuration.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Configuration / parse failure (CLI, spec files).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace quermass

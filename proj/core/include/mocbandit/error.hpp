#pragma once

#include <stdexcept>
#include <string>

namespace mocbandit {

/// Raised when an operation receives arguments that violate its preconditions.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for experiment-level misconfiguration (bad keys, exhausted replay files, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mocbandit

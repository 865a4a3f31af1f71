#pragma once

#include <stdexcept>
#include <string>

namespace ransim {

/// Input data does not match the documented file schema (missing column,
/// malformed field, wrong header).
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A value violates a domain invariant (non-positive land area, fraction
/// outside [0,1], duplicate key, infeasible margins).
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration or I/O failure: missing file, unreadable path, bad config
/// key. Maps to a distinct process exit code in the CLI.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ransim

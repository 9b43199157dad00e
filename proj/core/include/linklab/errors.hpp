#pragma once

#include <stdexcept>
#include <string>

namespace linklab {

/// Invalid static configuration (bad FrameConfig field, unknown key, ...).
/// The message names the offending parameter.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/matrix dimensions between arguments.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Not enough samples to complete the requested operation.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input that is structurally valid but has no usable content
/// (e.g. adding relative noise to an all-zero stream).
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure while reading or writing files (golden vectors, CSV outputs).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace linklab

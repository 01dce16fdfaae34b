#pragma once

#include <stdexcept>
#include <string>

namespace skdv {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite or otherwise unusable samples fed to a norm or transform.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// A lattice is too coarse for the requested operation.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

// A temporal cutoff does not fit inside the stored time window.
class WindowError : public Error {
public:
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

// Ratio of norms requested with a vanishing denominator.
class UndefinedRatioError : public Error {
public:
    explicit UndefinedRatioError(const std::string& msg) : Error(msg) {}
};

// Solution left the representable range; carries the time of failure.
class BlowupError : public Error {
public:
    BlowupError(const std::string& msg, double t_fail)
        : Error(msg), t_failure(t_fail) {}
    double t_failure;
};

// Not enough points, or degenerate data, for a least-squares fit.
class FitError : public Error {
public:
    explicit FitError(const std::string& msg) : Error(msg) {}
};

// Invalid experiment configuration; remembers the offending field.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field_name, const std::string& msg)
        : Error(field_name + ": " + msg), field(field_name) {}
    std::string field;
};

} // namespace skdv

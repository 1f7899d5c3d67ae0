#pragma once

#include <stdexcept>
#include <string>

namespace stowsim {

// Error hierarchy shared across the library. The C API maps each class to a
// status code; internal code throws these directly.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Placement rejected: compression allowance would be violated.
struct OverfullBin : Error {
    explicit OverfullBin(const std::string& msg) : Error(msg) {}
};

struct InvalidAffordance : Error {
    explicit InvalidAffordance(const std::string& msg) : Error(msg) {}
};

struct DegenerateClock : Error {
    explicit DegenerateClock(const std::string& msg) : Error(msg) {}
};

struct InsufficientData : Error {
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

struct ModelUnavailable : Error {
    explicit ModelUnavailable(const std::string& msg) : Error(msg) {}
};

struct InsufficientPods : Error {
    explicit InsufficientPods(const std::string& msg) : Error(msg) {}
};

// A runtime self-check failed; the CLI exits with a distinct code for these.
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace stowsim

#pragma once

#include <stdexcept>
#include <string>

namespace aptqfi {

/// Response denominator (det of the mode matrix) is numerically zero; the
/// steady state diverges at this point rather than existing as a limit.
class SingularResponse : public std::runtime_error {
public:
    explicit SingularResponse(const std::string& what) : std::runtime_error(what) {}
};

/// No steady state exists: at least one eigenvalue of the mode matrix has a
/// non-negative imaginary part, so the homogeneous solution does not decay.
class Unstable : public std::runtime_error {
public:
    explicit Unstable(const std::string& what) : std::runtime_error(what) {}
};

/// Fock-space cutoffs are too small for the requested state or evolution.
class TruncationTooSmall : public std::runtime_error {
public:
    explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// The adaptive integrator could not meet the local error tolerance.
class StepFailure : public std::runtime_error {
public:
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A scaling fit was requested on fewer than the minimum number of grid points.
class InsufficientGrid : public std::invalid_argument {
public:
    explicit InsufficientGrid(const std::string& what) : std::invalid_argument(what) {}
};

/// Run configuration violates an invariant (bad key, bad range, bad format).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aptqfi

#pragma once

#include <stdexcept>

namespace railloc {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition was broken (empty input, bad dimensions, ...).
struct ContractViolation : Error {
    using Error::Error;
};

/// A matrix that must be invertible (innovation or prior covariance) is not.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Coincident points, zero-length directions and similar geometry breakdowns.
struct DegenerateGeometryError : Error {
    using Error::Error;
};

/// Dual-frequency combination requested with equal carrier frequencies.
struct DegenerateFrequencyError : Error {
    using Error::Error;
};

/// Satellite at or below the local horizon where an elevation-dependent
/// model is undefined.
struct BelowHorizonError : Error {
    using Error::Error;
};

/// A computation produced non-finite values.
struct NumericalFailure : Error {
    using Error::Error;
};

/// Missing files, malformed headers or rows.
struct IoError : Error {
    using Error::Error;
};

/// Well-formed input carrying out-of-contract values.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace railloc

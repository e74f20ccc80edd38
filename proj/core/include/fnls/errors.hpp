#pragma once

#include <stdexcept>
#include <string>

namespace fnls {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value or combination of values violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Malformed input file (JSON syntax, missing field, wrong type).
struct ParseError : Error {
    using Error::Error;
};

/// Unsoftened Coulomb potential sampled exactly at a singular point.
struct SingularSampleError : Error {
    using Error::Error;
};

/// Gram matrix is numerically rank deficient; orthonormalization is meaningless.
struct RankDeficientError : Error {
    using Error::Error;
};

/// A rotation mixes orbitals that carry different occupation weights.
struct OccupationMismatchError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
struct DomainError : Error {
    using Error::Error;
};

/// Not enough data points inside a fit window.
struct InsufficientSamplesError : Error {
    using Error::Error;
};

} // namespace fnls

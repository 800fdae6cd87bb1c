#pragma once

#include <stdexcept>
#include <string>

namespace pprimary {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings (prime, precision or field mismatch).
struct MismatchError : Error {
    using Error::Error;
};

// An operation that requires a unit received a non-unit.
struct NotAUnitError : Error {
    using Error::Error;
};

// A unit-filtration level precondition was violated.
struct LevelError : Error {
    using Error::Error;
};

// The requested quantity cannot be resolved at the precision carried by the
// inputs, and within the iteration budget.
struct PrecisionExhaustedError : Error {
    using Error::Error;
};

// Invalid construction parameters (composite prime, precision too small, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Automorphism exponent not coprime to the residue characteristic.
struct GaloisError : Error {
    using Error::Error;
};

// Argument outside the documented domain of a pure function.
struct RangeError : Error {
    using Error::Error;
};

// Two independent computation paths disagreed. This is never a user error;
// it indicates a bug in the library itself.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

} // namespace pprimary

#ifndef NOETHER_ERRORS_HPP
#define NOETHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace noether {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ring contexts (variable count or scalar field).
struct RingMismatchError : Error {
    using Error::Error;
};

/// Text input could not be parsed, or an operator uses a forbidden derivative.
struct ParseError : Error {
    using Error::Error;
};

/// A colength/dimension growth loop failed to stabilize below its cap.
/// Usually means the input ideal's radical is not the expected prime.
struct StabilizationError : Error {
    using Error::Error;
};

/// Operators fail the bimodule membership criterion; they define no ideal.
struct BimoduleError : Error {
    using Error::Error;
};

/// A reconstructed ideal failed its post-verification.
struct VerificationError : Error {
    using Error::Error;
};

/// A sample point does not lie on the variety of the prime.
struct PointError : Error {
    using Error::Error;
};

/// Division by zero in a field, or inverting an element that is zero mod P.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Cooperative deadline expired (see Deadline).
struct TimeoutError : Error {
    using Error::Error;
};

} // namespace noether

#endif

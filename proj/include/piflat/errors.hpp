#pragma once

#include <stdexcept>
#include <string>

namespace piflat {

/* Base class for all errors raised by the library.  Everything derived from
 * Error maps to CLI exit code 1 (user or input error); negative mathematical
 * verdicts (not flat, verification failure) are ordinary return values and
 * map to exit code 2 at the CLI layer. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Expression or system file could not be parsed. */
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    explicit ParseError(const std::string& what) : Error(what), position(0) {}
    std::size_t position;
};

/* Ring mode violation: t-dependent coefficients are only supported with at
 * most one delay, and skew arithmetic requires exactly one delay. */
struct ModeError : Error {
    using Error::Error;
};

/* Division by zero in the ground field or in the fraction field of the
 * delay ring. */
struct DivisionByZeroError : Error {
    using Error::Error;
};

/* Matrix/operator shapes do not line up. */
struct DimensionError : Error {
    using Error::Error;
};

/* Values from different ring contexts were mixed. */
struct ContextMismatchError : Error {
    using Error::Error;
};

/* An internal invariant was violated (algorithm bug, never user input). */
struct InternalError : Error {
    using Error::Error;
};

} // namespace piflat

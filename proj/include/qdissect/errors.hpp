#pragma once

#include <stdexcept>
#include <string>

namespace qdissect {

// Base class for all failures raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient computation would exceed the 64-bit signed range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Division by q^m was requested while one of the first m coefficients is
// nonzero, so the quotient would not be a power series.
class DivisionByQError : public Error {
public:
    using Error::Error;
};

// A comparison or extraction asked for more coefficients than a series holds.
class InsufficientTruncationError : public Error {
public:
    using Error::Error;
};

// A named reference in an expression has no definition in scope.
class UndefinedLabelError : public Error {
public:
    using Error::Error;
};

// A declarative script file could not be parsed.
class ScriptParseError : public Error {
public:
    using Error::Error;
};

} // namespace qdissect

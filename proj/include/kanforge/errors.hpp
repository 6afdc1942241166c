#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kanforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A degeneracy/face word with an index outside the admissible range.
class MalformedWord : public Error {
public:
    using Error::Error;
};

/// Bad arguments to a constructor of standard objects.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// A presentation, map or bundle datum that violates its defining identities.
class ValidationError : public Error {
public:
    using Error::Error;
};

class FreenessViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CocycleViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Requested degree outside the computed part of a chain complex.
class RangeError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a chain map fails to commute with the boundaries.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// The operation is not available for the given input (e.g. infinite nerves).
class Unsupported : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A combinatorial enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t count)
        : Error(what + " (count " + std::to_string(count) + ")"), count_(count) {}

    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

} // namespace kanforge

#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Operands live in different rings (or truncation sets, or moduli).
class DescriptorMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed input document (JSON schema, ring string, ...).
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace wittlab

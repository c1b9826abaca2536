#pragma once

#include <stdexcept>
#include <string>

namespace bsk {

/// Operands built for different Baumslag-Solitar parameters, or an invalid parameter.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input: bad word/expression syntax, JSON not matching a schema.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (non-square matrix, non-complex, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A supplied certificate (inverse matrix, isometry) failed verification.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A descriptor violates a forced relation between its invariants.
class InconsistentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Never expected to fire.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bsk

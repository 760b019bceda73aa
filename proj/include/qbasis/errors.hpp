#pragma once

#include <stdexcept>
#include <string>

namespace qbasis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different atom spaces or have incompatible dimensions.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace qbasis

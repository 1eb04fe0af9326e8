#pragma once

#include <stdexcept>
#include <string>

namespace fpcore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    NotSquare() : Error("matrix is not square") {}
};

class Singular : public Error {
public:
    Singular() : Error("matrix is singular") {}
};

class DependentBasis : public Error {
public:
    DependentBasis() : Error("basis vectors are linearly dependent") {}
};

class AmbientMismatch : public Error {
public:
    AmbientMismatch() : Error("operators act on different ambient spaces") {}
};

/// Raised when an operation needs index <= 1 and the operator has a larger index.
class IndexTooLarge : public Error {
public:
    using Error::Error;
};

/// The core inverse exists iff the index is at most one.
class NoCoreInverse : public IndexTooLarge {
public:
    NoCoreInverse() : IndexTooLarge("core inverse exists iff index ≤ 1") {}
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed; indicates a library bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fpcore

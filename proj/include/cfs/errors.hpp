#pragma once

#include <stdexcept>
#include <string>

namespace cfs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes disagree (matrix/vector sizes, state lengths).
class DimensionError : public Error {
public:
    using Error::Error;
};

class InversionOfZero : public Error {
public:
    InversionOfZero() : Error("inversion of zero in GF(2^m)") {}
};

/// Polynomial has no inverse modulo the given modulus.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Partial Euclid was asked to run on a zero remainder.
class DegenerateSyndrome : public Error {
public:
    using Error::Error;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

class CensusInfeasible : public Error {
public:
    using Error::Error;
};

class AttemptLimitExceeded : public Error {
public:
    using Error::Error;
};

/// A decodability guarantee was broken at signing time. Indicates a corrupt
/// key or a broken weight map, never bad luck.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class GammaContractViolation : public Error {
public:
    using Error::Error;
};

class NoPermutation : public Error {
public:
    using Error::Error;
};

/// Malformed key, signature, matrix or hex text.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace cfs

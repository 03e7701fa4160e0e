#pragma once

#include <stdexcept>
#include <string>

namespace harmcheck {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two residues with different (prime, exponent) were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Inverse requested for a residue divisible by the prime.
class NonInvertible : public Error {
public:
    using Error::Error;
};

/// A fraction whose denominator is divisible by the prime cannot be reduced.
class NonInvertibleDenominator : public Error {
public:
    using Error::Error;
};

/// p-adic valuation of zero is not an integer.
class UndefinedValuation : public Error {
public:
    using Error::Error;
};

/// Exact division by a prime power failed: the residue is not divisible enough.
class InsufficientValuation : public Error {
public:
    using Error::Error;
};

/// The requested Bernoulli number has the prime in its denominator
/// (even index divisible by p-1).
class VonStaudtPole : public Error {
public:
    using Error::Error;
};

/// A brute-force enumeration was requested beyond its enforced bound.
class OracleBoundExceeded : public Error {
public:
    using Error::Error;
};

/// A check was invoked outside the range where its statement applies.
class OutOfApplicabilityRange : public Error {
public:
    using Error::Error;
};

/// A check id not present in the registry.
class UnknownCheckId : public Error {
public:
    using Error::Error;
};

/// An invalid integer interval.
class BadRange : public Error {
public:
    using Error::Error;
};

}  // namespace harmcheck

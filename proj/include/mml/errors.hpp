#pragma once

#include <stdexcept>
#include <string>

namespace mml {

/// Base class for every failure raised by the verification engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dual scalar with (numerically) zero real part was inverted.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

/// An element that must be hyperbolic (|trace| > 2) is elliptic or parabolic.
class NotHyperbolic : public Error {
public:
    using Error::Error;
};

/// Trace coordinates for which no holed-torus representation can be built.
class InvalidCoords : public Error {
public:
    using Error::Error;
};

/// Farey trace recursion and direct word evaluation disagree.
class RecursionMismatch : public Error {
public:
    using Error::Error;
};

/// The certified tail could not be pushed below tolerance under the bin ceiling.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Malformed input file or command-line value.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace mml

#pragma once

#include <stdexcept>
#include <string>

namespace korselt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some prime divides the input more than once.
class NotSquarefree : public Error {
public:
    using Error::Error;
};

/// The input is not a product of exactly two distinct primes.
class NotSemiprime : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// An intermediate value left the representable range. Never wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the size the brute-force oracle accepts.
class ScaleGuard : public Error {
public:
    using Error::Error;
};

/// A verifier was invoked outside the interval its claim is about.
class RangeError : public Error {
public:
    using Error::Error;
};

class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (rational literals, table data).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace korselt

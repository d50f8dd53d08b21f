#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational construction with a zero denominator, or division by zero.
struct ZeroDenominator : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// gamma is an integer <= 0, so n+gamma vanishes for some n >= 0.
struct InvalidGamma : Error {
    using Error::Error;
};

struct ZeroAlpha : Error {
    using Error::Error;
};

// The sequence has a vanishing term, so reciprocals are undefined.
struct ZeroTerm : Error {
    using Error::Error;
};

struct InsufficientTerms : Error {
    using Error::Error;
};

struct SingularDenominator : Error {
    using Error::Error;
};

struct UnknownEntry : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

} // namespace hankel

#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

// Every library failure derives from Error; the CLI maps all of them to an
// operational exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inverting a series that is zero through its truncation window.
class SingularSeries : public Error {
public:
    using Error::Error;
};

// A denominator factor vanishes exactly for the chosen parameters.
class PoleDetected : public Error {
public:
    using Error::Error;
};

// A numeric denominator factor comes closer to zero than pole_tol.
class PoleProximity : public Error {
public:
    using Error::Error;
};

class NonConvergent : public Error {
public:
    using Error::Error;
};

class WindowExceedsOrder : public Error {
public:
    using Error::Error;
};

class UnknownPair : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

class UnknownSeries : public Error {
public:
    using Error::Error;
};

// Malformed or out-of-range user input (flags, parameter grammar, constraints).
class ParameterError : public Error {
public:
    using Error::Error;
};

} // namespace wpb
